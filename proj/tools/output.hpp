#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "kerrho/generators.hpp"
#include "kerrho/polynomial.hpp"
#include "kerrho/semigroup.hpp"

namespace kerrho::cli {

inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.canonical_terms())
        terms.push_back({{"c", rational_to_string(c)}, {"e", {e.x, e.y, e.z}}});
    return terms;
}

inline Poly poly_from_json(const nlohmann::json& terms) {
    Poly p;
    for (const auto& term : terms) {
        Rational c;
        if (c.set_str(term.at("c").get<std::string>(), 10) != 0) throw ParseError("bad rational coefficient");
        c.canonicalize();
        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 3) throw ParseError("exponent must be a triple");
        p.add_term({e[0].get<long>(), e[1].get<long>(), e[2].get<long>()}, c);
    }
    return p;
}

inline nlohmann::json generators_to_json(const GeneratorSet& gs) {
    nlohmann::json gens = nlohmann::json::array();
    for (const GeneratorRecord& g : gs.generators)
        gens.push_back({{"k", g.k}, {"sigma_order", g.sigma_order}, {"f", poly_to_json(g.f)}, {"g", poly_to_json(g.g)}});
    return {{"n", gs.n}, {"generators", gens}};
}

inline GeneratorSet generators_from_json(const nlohmann::json& doc) {
    GeneratorSet gs{doc.at("n").get<long>(), {}};
    for (const auto& g : doc.at("generators"))
        gs.generators.push_back({g.at("k").get<long>(), poly_from_json(g.at("f")), poly_from_json(g.at("g")),
                                 g.at("sigma_order").get<long>()});
    return gs;
}

inline std::string generators_text(const GeneratorSet& gs, bool with_leading) {
    std::ostringstream out;
    for (const GeneratorRecord& g : gs.generators) {
        if (with_leading)
            out << "f" << g.k << " [sigma " << g.sigma_order << "] = " << g.f.to_string() << "\n"
                << "g" << g.k << " = " << g.g.to_string() << "\n";
        else
            out << g.f.to_string() << "\n";
    }
    return out.str();
}

inline std::string compact(const Poly& p) {
    std::string s = p.to_string();
    std::string out;
    for (char ch : s)
        if (ch != ' ') out += ch;
    return out;
}

inline std::string cas_script(const SemigroupContext& ctx, const GeneratorSet& gs) {
    std::ostringstream out;
    out << "// kernel of x -> t^" << ctx.a << "+t^" << ctx.a + ctx.q << ", y -> t^" << ctx.a + 1 << ", z -> t^"
        << ctx.a + 2 << " for n=" << ctx.n << "\n";
    out << "ring A=0,(x,y,z),ds;\n";
    for (const GeneratorRecord& g : gs.generators) out << "poly f" << g.k << "=" << compact(g.f) << ";\n";
    out << "ideal I=";
    for (std::size_t i = 0; i < gs.generators.size(); ++i) out << (i ? "," : "") << "f" << gs.generators[i].k;
    out << ";\n";
    out << "ring B=0,(u),ds;\n";
    out << "ideal L=u^(" << ctx.a << ")+u^(" << ctx.a + ctx.q << "),u^(" << ctx.a + 1 << "),u^(" << ctx.a + 2 << ");\n";
    out << "map phi=A,L;\n";
    for (const GeneratorRecord& g : gs.generators) out << "phi(f" << g.k << ");\n";
    out << "ideal Z;\n";
    out << "setring A;\n";
    out << "ideal P=preimage(B,phi,Z);\n";
    out << "minbase(P);\n";
    out << "size(minbase(P));\n";
    out << "size(reduce(I,std(P)));\n";
    out << "size(reduce(P,std(I)));\n";
    return out.str();
}

}  // namespace kerrho::cli
