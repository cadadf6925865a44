#pragma once

#include "hf/json_io.hpp"

namespace hf {

// A versioned store of the printed polynomials and reference data, loaded from
// data files. Each fixture carries integrity checks (degree, a frozen
// evaluation, a discriminant smooth part where one is known).
struct Fixture {
    std::string id;
    std::string origin;
    json raw;
    std::vector<std::string> poly_order;
    std::map<std::string, MultiPoly> polys;

    const MultiPoly& poly(const std::string& name = "main") const;
    bool has(const std::string& name) const { return polys.count(name) > 0; }
};

class FixtureStore {
  public:
    explicit FixtureStore(std::string dir = default_dir());
    static std::string default_dir();

    const Fixture& get(const std::string& id) const;
    std::vector<std::string> ids() const;
    // runs every fixture's checks block; returns human-readable failures
    std::vector<std::string> check_all() const;
    std::vector<std::string> check(const std::string& id) const;

  private:
    std::map<std::string, Fixture> fixtures_;
    void load_file(const std::string& path);
};

}  // namespace hf
