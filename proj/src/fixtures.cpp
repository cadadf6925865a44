#include "hf/fixtures.hpp"

#include "hf/specpoints.hpp"

#include <algorithm>
#include <filesystem>

namespace hf {

const MultiPoly& Fixture::poly(const std::string& name) const {
    auto it = polys.find(name);
    if (it == polys.end()) throw std::invalid_argument("fixture " + id + ": no polynomial " + name);
    return it->second;
}

std::string FixtureStore::default_dir() {
#ifdef HF_DATA_DIR
    return std::string(HF_DATA_DIR) + "/fixtures";
#else
    return "data/fixtures";
#endif
}

FixtureStore::FixtureStore(std::string dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    // fixtures with "use" imports may need several passes
    std::vector<std::string> pending = paths;
    size_t guard = pending.size() + 2;
    while (!pending.empty() && guard--) {
        std::vector<std::string> next;
        for (const auto& p : pending) {
            try {
                load_file(p);
            } catch (const std::invalid_argument& e) {
                std::string what = e.what();
                if (what.find("unresolved import") != std::string::npos) next.push_back(p);
                else throw;
            }
        }
        if (next.size() == pending.size())
            throw std::runtime_error("fixture imports cannot be resolved");
        pending = std::move(next);
    }
}

void FixtureStore::load_file(const std::string& path) {
    json j = load_json_file(path);
    Fixture fx;
    fx.id = j.at("id").get<std::string>();
    if (fixtures_.count(fx.id)) return;
    fx.origin = j.value("origin", "");
    fx.raw = j;
    std::map<std::string, MultiPoly> env;
    if (j.contains("use")) {
        for (const auto& dep : j.at("use")) {
            auto it = fixtures_.find(dep.get<std::string>());
            if (it == fixtures_.end())
                throw std::invalid_argument("unresolved import " + dep.get<std::string>());
            for (const auto& [k, v] : it->second.polys) env[k] = v;
        }
    }
    std::vector<std::string> vars;
    if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("polys")) {
        for (const auto& entry : j.at("polys")) {
            std::string name = entry.at(0).get<std::string>();
            const json& def = entry.at(1);
            MultiPoly p;
            if (def.is_string()) p = parse_poly_expr(def.get<std::string>(), vars, &env);
            else p = poly_from_json(def);
            env[name] = p;
            fx.polys[name] = std::move(p);
            fx.poly_order.push_back(name);
        }
    }
    fixtures_[fx.id] = std::move(fx);
}

const Fixture& FixtureStore::get(const std::string& id) const {
    auto it = fixtures_.find(id);
    if (it == fixtures_.end()) throw std::invalid_argument("unknown fixture id: " + id);
    return it->second;
}

std::vector<std::string> FixtureStore::ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : fixtures_) out.push_back(k);
    return out;
}

namespace {

std::vector<Rat> point_for(const MultiPoly& p, const json& at) {
    std::vector<Rat> pt;
    for (const auto& v : p.vars) pt.push_back(rat_from_string(at.at(v).get<std::string>()));
    return pt;
}

}  // namespace

std::vector<std::string> FixtureStore::check(const std::string& id) const {
    const Fixture& fx = get(id);
    std::vector<std::string> fails;
    if (!fx.raw.contains("checks")) return fails;
    const json& checks = fx.raw.at("checks");
    auto complain = [&](const std::string& msg) { fails.push_back(fx.id + ": " + msg); };
    if (checks.contains("degree")) {
        for (const auto& c : checks.at("degree")) {
            const MultiPoly& p = fx.poly(c.at(0).get<std::string>());
            int d = p.degree(c.at(1).get<std::string>());
            if (d != c.at(2).get<int>())
                complain("degree of " + c.at(0).get<std::string>() + " in " +
                         c.at(1).get<std::string>() + " is " + std::to_string(d) + ", expected " +
                         std::to_string(c.at(2).get<int>()));
        }
    }
    if (checks.contains("evals")) {
        for (const auto& c : checks.at("evals")) {
            const MultiPoly& p = fx.poly(c.at(0).get<std::string>());
            Rat got = mp_eval(p, point_for(p, c.at(1)));
            Rat want = rat_from_string(c.at(2).get<std::string>());
            if (got != want)
                complain("evaluation of " + c.at(0).get<std::string>() + " gives " +
                         rat_to_string(got) + ", expected " + rat_to_string(want));
        }
    }
    if (checks.contains("disc_smooth")) {
        for (const auto& c : checks.at("disc_smooth")) {
            const MultiPoly& p = fx.poly(c.at(0).get<std::string>());
            std::string var = c.at(1).get<std::string>();
            MultiPoly sp = p;
            for (const auto& [k, v] : c.at(2).items())
                sp = mp_subst(sp, k, rat_from_string(v.get<std::string>()));
            UniPoly q = mp_to_unipoly(sp);
            q.var = var;
            std::vector<Int> P;
            for (const auto& x : c.at(3)) P.push_back(Int(x.get<long>()));
            Rat disc = up_disc(q);
            Int num(disc.get_num()), den(disc.get_den());
            try {
                Int cls = squarefree_part_smooth(num * den, P);
                Int want(c.at(4).get<std::string>());
                if (cls != want)
                    complain("disc smooth part is " + cls.get_str() + ", expected " + want.get_str());
            } catch (const std::domain_error& e) {
                complain(std::string("disc smooth part not certifiable: ") + e.what());
            }
        }
    }
    return fails;
}

std::vector<std::string> FixtureStore::check_all() const {
    std::vector<std::string> fails;
    for (const auto& [id, fx] : fixtures_) {
        auto f = check(id);
        fails.insert(fails.end(), f.begin(), f.end());
    }
    return fails;
}

}  // namespace hf
