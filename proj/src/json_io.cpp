#include "hf/json_io.hpp"

#include <fstream>

namespace hf {

json unipoly_to_json(const UniPoly& p) {
    json j;
    j["var"] = p.var;
    json cs = json::array();
    for (const auto& c : p.c) cs.push_back(rat_to_string(c));
    j["coeffs"] = cs;
    return j;
}

UniPoly unipoly_from_json(const json& j) {
    UniPoly p;
    p.var = j.at("var").get<std::string>();
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) p.c.push_back(rat_from_string(c.get<std::string>()));
        else p.c.push_back(Rat(c.get<long>()));
    }
    p.trim();
    return p;
}

json multipoly_to_json(const MultiPoly& p) {
    json j;
    j["vars"] = p.vars;
    json ts = json::array();
    for (const auto& [e, c] : p.terms) {
        json t = json::array();
        t.push_back(e);
        t.push_back(Int(c.get_num()).get_str());
        t.push_back(Int(c.get_den()).get_str());
        ts.push_back(t);
    }
    j["terms"] = ts;
    return j;
}

MultiPoly multipoly_from_json(const json& j) {
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        std::vector<unsigned> e = t.at(0).get<std::vector<unsigned>>();
        if (e.size() != p.vars.size())
            throw std::invalid_argument("multipoly_from_json: exponent arity mismatch");
        Int num(t.at(1).get<std::string>());
        Int den(t.at(2).get<std::string>());
        Rat c(num);
        c /= Rat(den);
        p.terms.emplace_back(std::move(e), c);
    }
    p.normalize();
    return p;
}

json poly_to_json(const MultiPoly& p) {
    int active = 0;
    for (const auto& [e, c] : p.terms)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) active = std::max(active, 1);
    if (p.vars.size() == 1) return unipoly_to_json(mp_to_unipoly(p));
    return multipoly_to_json(p);
}

MultiPoly poly_from_json(const json& j) {
    if (j.contains("coeffs")) return MultiPoly::from_unipoly(unipoly_from_json(j));
    return multipoly_from_json(j);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

}  // namespace hf

namespace hf {

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;
    const std::map<std::string, MultiPoly>* env;

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("poly expr: " + what + " at position " + std::to_string(pos) +
                                    " of \"" + s + "\"");
    }

    MultiPoly parse_expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            skip();
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) {
                // constant divisor only
                MultiPoly d = parse_factor();
                if (d.total_degree() > 0) fail("nonconstant divisor");
                Rat dv = d.is_zero() ? Rat(0) : d.terms[0].second;
                if (dv == 0) fail("division by zero");
                acc = acc * (Rat(1) / dv);
            } else break;
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("missing exponent");
            unsigned long e = std::stoul(s.substr(start, pos - start));
            return mp_pow(base, e);
        }
        return base;
    }

    MultiPoly parse_base() {
        skip();
        if (eat('(')) {
            MultiPoly inner = parse_expr();
            if (!eat(')')) fail("missing )");
            return inner;
        }
        if (pos < s.size() && (isdigit((unsigned char)s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            return MultiPoly::constant(vars, Rat(Int(s.substr(start, pos - start))));
        }
        if (pos < s.size() && (isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
            size_t start = pos;
            while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            for (const auto& v : vars)
                if (v == name) return MultiPoly::var_poly(vars, name);
            if (env) {
                auto it = env->find(name);
                if (it != env->end()) return mp_align(it->second, merge_vars(vars, it->second.vars));
            }
            fail("unknown identifier " + name);
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly parse_poly_expr(const std::string& s, const std::vector<std::string>& vars,
                          const std::map<std::string, MultiPoly>* env) {
    ExprParser p{s, 0, vars, env};
    MultiPoly r = p.parse_expr();
    p.skip();
    if (p.pos != s.size()) p.fail("trailing input");
    return mp_align(r, vars.empty() && !r.vars.empty() ? r.vars : vars);
}

}  // namespace hf
