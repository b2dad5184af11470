#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

#include "cocycles.hpp"

namespace cyclochar {

/*
 * Serialization of the emittable elements.  JSON is the machine format:
 *
 *   {"kind": "...", "degree": m,
 *    "terms": [{"coeff": "p/q", "legs": [["token", ...], ...], ...}]}
 *
 * with the generator token grammar X_k, Y_i^j, d^i_{j,k,...}.  Twisted
 * cochains carry the dual-basis leg as "vstar" (the V-monomial the
 * functional is dual to, as R-tokens), Hopf cochains carry the V-monomial
 * as "v".  Terms and arrays are emitted in canonical key order, so equal
 * elements serialize to equal bytes.  parse(emit(x)) = x by construction.
 */

inline std::string r_token(int n, int flat) {
    auto [i, j] = gl_unflat(n, flat);
    return "R^" + std::to_string(i) + "_" + std::to_string(j);
}

inline int parse_r_token(int n, const std::string& tok) {
    if (tok.rfind("R^", 0) != 0)
        throw std::invalid_argument("bad coefficient token: " + tok);
    auto us = tok.find('_');
    if (us == std::string::npos)
        throw std::invalid_argument("bad coefficient token: " + tok);
    int i = std::stoi(tok.substr(2, us - 2));
    int j = std::stoi(tok.substr(us + 1));
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("coefficient token out of range: " + tok);
    return gl_flat(n, {i, j});
}

inline nlohmann::json sym_to_json(int n, const SymMonomial& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (int t : m)
        arr.push_back(r_token(n, t));
    return arr;
}

inline SymMonomial sym_from_json(int n, const nlohmann::json& arr) {
    SymMonomial m;
    for (const auto& tok : arr)
        m.push_back(parse_r_token(n, tok.get<std::string>()));
    std::sort(m.begin(), m.end());
    return m;
}

inline nlohmann::json legs_to_json(const TensorWord& legs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& leg : legs) {
        nlohmann::json l = nlohmann::json::array();
        for (const auto& g : leg)
            l.push_back(gen_token(g));
        arr.push_back(std::move(l));
    }
    return arr;
}

inline TensorWord legs_from_json(const nlohmann::json& arr) {
    TensorWord legs;
    for (const auto& l : arr) {
        PBWMonomial leg;
        for (const auto& tok : l)
            leg.push_back(parse_gen_token(tok.get<std::string>()));
        legs.push_back(std::move(leg));
    }
    return legs;
}

struct EmittedElement {
    std::string kind;  // "elementary" | "twisted" | "hopf"
    int n = 1;
    int degree = 0;
    Elementary elementary;
    Twisted twisted;
    Cochain hopf_cochain;
};

inline nlohmann::json emit_json(const EmittedElement& e) {
    nlohmann::json out;
    out["kind"] = e.kind;
    out["n"] = e.n;
    out["degree"] = e.degree;
    nlohmann::json terms = nlohmann::json::array();
    if (e.kind == "elementary") {
        for (const auto& [w, c] : e.elementary.terms())
            terms.push_back({{"coeff", to_string(c)}, {"legs", legs_to_json(w)}});
    } else if (e.kind == "twisted") {
        for (const auto& [k, c] : e.twisted.terms())
            terms.push_back({{"coeff", to_string(c)},
                             {"vstar", sym_to_json(e.n, k.dual)},
                             {"legs", legs_to_json(k.legs)}});
    } else if (e.kind == "hopf") {
        for (const auto& [k, c] : e.hopf_cochain.terms())
            terms.push_back({{"coeff", to_string(c)},
                             {"v", sym_to_json(e.n, k.m)},
                             {"legs", legs_to_json(k.legs)}});
    } else {
        throw std::invalid_argument("unknown element kind " + e.kind);
    }
    out["terms"] = std::move(terms);
    return out;
}

inline EmittedElement parse_element(const nlohmann::json& j) {
    EmittedElement e;
    e.kind = j.at("kind").get<std::string>();
    e.n = j.at("n").get<int>();
    e.degree = j.at("degree").get<int>();
    for (const auto& term : j.at("terms")) {
        Rational c = parse_rational(term.at("coeff").get<std::string>());
        TensorWord legs = legs_from_json(term.at("legs"));
        if (e.kind == "elementary")
            e.elementary.add(legs, c);
        else if (e.kind == "twisted")
            e.twisted.add({sym_from_json(e.n, term.at("vstar")), legs}, c);
        else if (e.kind == "hopf")
            e.hopf_cochain.add({sym_from_json(e.n, term.at("v")), legs}, c);
        else
            throw std::invalid_argument("unknown element kind " + e.kind);
    }
    return e;
}

/* ---- text format (parseable) ---- */

inline std::string emit_text(const EmittedElement& e) {
    // one line of metadata, then one line per term:
    //   coeff | vstar_or_v_tokens | leg tokens, legs separated by '|'
    std::ostringstream os;
    os << e.kind << " n=" << e.n << " degree=" << e.degree << "\n";
    auto put_legs = [&](const TensorWord& legs) {
        for (const auto& leg : legs) {
            os << " |";
            for (const auto& g : leg)
                os << ' ' << gen_token(g);
        }
    };
    if (e.kind == "elementary") {
        for (const auto& [w, c] : e.elementary.terms()) {
            os << to_string(c);
            put_legs(w);
            os << "\n";
        }
    } else {
        const bool twisted = (e.kind == "twisted");
        auto emit_term = [&](const SymMonomial& m, const TensorWord& legs, const Rational& c) {
            os << to_string(c) << " @";
            for (int t : m)
                os << ' ' << r_token(e.n, t);
            put_legs(legs);
            os << "\n";
        };
        if (twisted)
            for (const auto& [k, c] : e.twisted.terms())
                emit_term(k.dual, k.legs, c);
        else
            for (const auto& [k, c] : e.hopf_cochain.terms())
                emit_term(k.m, k.legs, c);
    }
    return os.str();
}

inline EmittedElement parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header))
        throw std::invalid_argument("empty element text");
    EmittedElement e;
    {
        std::istringstream hs(header);
        hs >> e.kind;
        std::string kv;
        while (hs >> kv) {
            if (kv.rfind("n=", 0) == 0)
                e.n = std::stoi(kv.substr(2));
            else if (kv.rfind("degree=", 0) == 0)
                e.degree = std::stoi(kv.substr(7));
        }
    }
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string coeff_tok;
        ls >> coeff_tok;
        Rational c = parse_rational(coeff_tok);
        SymMonomial m;
        TensorWord legs;
        std::string tok;
        bool in_sym = false;
        while (ls >> tok) {
            if (tok == "@") {
                in_sym = true;
            } else if (tok == "|") {
                in_sym = false;
                legs.push_back({});
            } else if (in_sym) {
                m.push_back(parse_r_token(e.n, tok));
            } else {
                if (legs.empty())
                    throw std::invalid_argument("leg token before any leg: " + line);
                legs.back().push_back(parse_gen_token(tok));
            }
        }
        std::sort(m.begin(), m.end());
        if (e.kind == "elementary")
            e.elementary.add(legs, c);
        else if (e.kind == "twisted")
            e.twisted.add({m, legs}, c);
        else
            e.hopf_cochain.add({m, legs}, c);
    }
    return e;
}

/* ---- LaTeX (display only) ---- */

inline std::string latex_gen(int n, const HnGenerator& g) {
    std::ostringstream os;
    switch (g.kind) {
        case GenKind::X:
            if (n == 1)
                os << "X";
            else
                os << "X_{" << g.a << "}";
            break;
        case GenKind::Y:
            if (n == 1)
                os << "Y";
            else
                os << "Y_{" << g.a << "}^{" << g.b << "}";
            break;
        case GenKind::Delta:
            if (n == 1) {
                os << "\\delta_" << (g.low.size() - 1);
            } else {
                os << "\\delta^{" << g.a << "}_{";
                for (int t : g.low)
                    os << t;
                os << "}";
            }
            break;
    }
    return os.str();
}

inline std::string latex_monomial(int n, const PBWMonomial& m) {
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t t = 0; t < m.size(); ++t) {
        if (t)
            s += " ";
        s += latex_gen(n, m[t]);
    }
    // collapse repeated factors lightly: keep plain product form
    return s;
}

inline std::string emit_latex(const EmittedElement& e) {
    std::ostringstream os;
    bool first = true;
    auto coeff_prefix = [&](const Rational& c) {
        Rational a = abs(c);
        std::string sgn = (c < 0) ? "- " : (first ? "" : "+ ");
        std::string mag = (a == 1) ? "" : (to_string(a) + "\\,");
        first = false;
        return sgn + mag;
    };
    auto put_legs = [&](const TensorWord& legs, bool lead_one) {
        bool started = false;
        if (lead_one) {
            os << "1";
            started = true;
        }
        for (const auto& leg : legs) {
            if (started)
                os << "\\otimes ";
            os << latex_monomial(e.n, leg);
            started = true;
        }
    };
    if (e.kind == "elementary") {
        for (const auto& [w, c] : e.elementary.terms()) {
            os << coeff_prefix(c);
            put_legs(w, false);
            os << " ";
        }
    } else if (e.kind == "twisted") {
        for (const auto& [k, c] : e.twisted.terms()) {
            os << coeff_prefix(c);
            if (k.dual.empty())
                os << "1^{\\ast}";
            else {
                os << "S_{";
                for (int t : k.dual) {
                    auto [i, j] = gl_unflat(e.n, t);
                    os << "R^{" << i << "}_{" << j << "}";
                }
                os << "}";
            }
            os << "\\otimes ";
            put_legs(k.legs, false);
            os << " ";
        }
    } else {
        for (const auto& [k, c] : e.hopf_cochain.terms()) {
            os << coeff_prefix(c);
            if (k.m.empty())
                os << "1";
            else
                for (int t : k.m) {
                    auto [i, j] = gl_unflat(e.n, t);
                    os << "R^{" << i << "}_{" << j << "}";
                }
            os << "\\otimes ";
            put_legs(k.legs, false);
            os << " ";
        }
    }
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

/* ---- the emittable element registry ---- */

inline std::vector<std::string> emittable_names() {
    return {"codim1-phi", "codim2-phi", "TF-H1", "TF-H2", "GV",     "R1",
            "R2",         "R3",         "R4",    "chi-GV", "chi-R1", "chi-R2",
            "chi-R3",     "chi-R4",     "vey-basis-n1",    "vey-basis-n2"};
}

// vey-basis-* names expand to one element per class; others are single.
inline std::vector<std::pair<std::string, EmittedElement>> build_emittable(const std::string& name) {
    auto elementary = [](int n, Elementary x, int degree) {
        EmittedElement e;
        e.kind = "elementary";
        e.n = n;
        e.degree = degree;
        e.elementary = std::move(x);
        return e;
    };
    if (name == "codim1-phi") {
        EmittedElement e;
        e.kind = "twisted";
        e.n = 1;
        e.degree = 1;
        e.twisted = codim1_cocycle().twisted;
        return {{name, std::move(e)}};
    }
    if (name == "codim2-phi") {
        EmittedElement e;
        e.kind = "twisted";
        e.n = 2;
        e.degree = 2;
        e.twisted = codim2_phi_display();
        return {{name, std::move(e)}};
    }
    if (name == "TF-H1" || name == "TF-H2") {
        int n = (name == "TF-H1") ? 1 : 2;
        // the raw (m+1)-leg form, leading unit leg included
        TransverseFundamental tf = transverse_fundamental(n);
        return {{name, elementary(n, tf.raw, n * n + n)}};
    }
    if (name == "GV")
        return {{name, elementary(1, Elementary::basis({{Dgen(1, {1, 1})}}), 1)}};
    if (name == "R1" || name == "R2" || name == "R3" || name == "R4") {
        for (auto& g : hcK_generators(2))
            if (g.name == name) {
                EmittedElement e;
                e.kind = "hopf";
                e.n = 2;
                e.degree = g.degree;
                e.hopf_cochain = g.hopf_cochain;
                return {{name, std::move(e)}};
            }
        throw std::logic_error("generator not found");
    }
    if (name.rfind("chi-", 0) == 0) {
        int n = (name == "chi-GV" || name.rfind("chi-R", 0) == 0) ? 2 : 1;
        CharacteristicClasses cc = characteristic_classes(n);
        for (auto& b : cc.classes)
            if (b.name == name)
                return {{name, elementary(n, b.elementary, b.degree)}};
        throw std::invalid_argument("unknown emittable " + name);
    }
    if (name == "vey-basis-n1" || name == "vey-basis-n2") {
        int n = (name == "vey-basis-n1") ? 1 : 2;
        std::vector<std::pair<std::string, EmittedElement>> out;
        for (const auto& [cname, rep] : vey_basis(n)) {
            // serialize a Weil cochain through the hopf-cochain shape: the
            // wedge word rides in "legs" as single-Y monomials
            EmittedElement e;
            e.kind = "hopf";
            e.n = n;
            for (const auto& [k, c] : rep.terms()) {
                TensorWord legs;
                for (int t : k.first) {
                    auto [i, j] = gl_unflat(n, t);
                    legs.push_back({Ygen(i, j)});
                }
                e.hopf_cochain.add({k.second, legs}, c);
                e.degree = static_cast<int>(WeilComplex::weil_degree(k));
            }
            out.push_back({name + ":" + cname, std::move(e)});
        }
        return out;
    }
    throw std::invalid_argument("unknown emittable " + name);
}

}  // namespace cyclochar
