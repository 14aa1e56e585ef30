#include "cdga/scenarios.hpp"

#include "cdga/cohomology.hpp"
#include "cdga/model_io.hpp"

#include <sstream>

namespace cdga {

Dga heisenberg_model()
{
    Algebra alg({{"a", 1}, {"b", 1}, {"c", 1}});
    Element dc = -(alg.gen_element(0) * alg.gen_element(1));
    return Dga(alg, {alg.zero(), alg.zero(), std::move(dc)});
}

Dga torus_model(int n)
{
    if (n < 1)
        throw Error("torus dimension must be >= 1");
    std::vector<GeneratorSpec> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"t" + std::to_string(i), 1});
    Algebra alg(std::move(gens));
    std::vector<Element> diffs(n, alg.zero());
    return Dga(std::move(alg), std::move(diffs));
}

ProductModel paper_x(int dim)
{
    if (dim != 7 && dim != 8)
        throw Error("supported dimensions are 7 and 8");
    Dga dga = tensor(heisenberg_model(), torus_model(dim - 3));
    const Algebra& alg = dga.algebra();
    auto g = [&](const char* name) { return alg.gen_element(alg.gen_index(name)); };
    Element a1 = g("a") * g("t1");
    Element b2 = g("b") * g("t2");
    Element a3 = g("a") * g("t3");
    Element dual = dim == 8 ? g("b") * g("t4") * g("t5") : g("b") * g("t4");
    return ProductModel{dim, std::move(dga), std::move(a1), std::move(b2), std::move(a3), std::move(dual)};
}

namespace {

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

PaperReport verify_paper(int dim)
{
    ProductModel pm = paper_x(dim);
    const Dga& dga = pm.dga;

    PaperReport rep;
    rep.dimension = dim;
    rep.model_description =
        dim == 8 ? "Heisenberg 3-manifold model tensor 5-torus model (8-dimensional product)"
                 : "Heisenberg 3-manifold model tensor 4-torus model (7-dimensional product)";

    auto verdict = [&](const std::string& name, bool ok, std::string detail) {
        rep.verdicts.push_back(StepVerdict{name, ok, std::move(detail)});
    };

    // d^2 = 0 on every generator (the constructor enforces this; recheck so
    // the report stands on its own).
    {
        bool ok = true;
        for (int i = 0; i < dga.algebra().gen_count() && ok; ++i)
            ok = dga.d(dga.gen_differential(i)).is_zero();
        verdict("differential squares to zero", ok,
                "checked on all " + std::to_string(dga.algebra().gen_count()) + " generators");
    }

    // Betti table, Euler characteristic, nondegenerate pairing per degree.
    {
        rep.betti = betti(dga);
        const std::vector<int> want = dim == 8 ? std::vector<int>{1, 7, 22, 41, 50, 41, 22, 7, 1}
                                               : std::vector<int>{1, 6, 16, 25, 25, 16, 6, 1};
        verdict("betti numbers", rep.betti == want, join_ints(rep.betti));

        int euler = 0;
        for (size_t k = 0; k < rep.betti.size(); ++k)
            euler += (k % 2 == 0 ? 1 : -1) * rep.betti[k];
        verdict("euler characteristic zero", euler == 0, "chi = " + std::to_string(euler));

        bool nondeg = true;
        for (int k = 0; k <= dim; ++k)
            if (!duality_matrix(dga, k).nondegenerate) {
                nondeg = false;
                break;
            }
        verdict("poincare pairing nondegenerate in every degree", nondeg, "degrees 0.." + std::to_string(dim));
    }

    // Degree-1 triple product on the Heisenberg factor alone.
    try {
        Dga heis = heisenberg_model();
        const Algebra& halg = heis.algebra();
        Element ha = halg.gen_element(0);
        Element hb = halg.gen_element(1);
        MasseyResult hm = triple_massey(heis, ha, hb, ha);
        Element want = Rational(2) * (ha * halg.gen_element(2));
        bool ok = !hm.vanishes && hm.indeterminacy.dim() == 0 &&
                  hm.w_class == cohomology(heis, 2).class_coords(want);
        verdict("heisenberg factor triple product is [2*a*c]", ok,
                "representative " + render(hm.w) + ", indeterminacy dimension " +
                    std::to_string(hm.indeterminacy.dim()));
    } catch (const Error& e) {
        verdict("heisenberg factor triple product is [2*a*c]", false, e.what());
    }

    // Degree-2 triple product on the product model, its indeterminacy, and
    // the pairing certificate against the dual class.
    try {
        MasseyResult mr = triple_massey(dga, pm.a1, pm.b2, pm.a3);
        const Algebra& alg = dga.algebra();
        auto g = [&](const char* name) { return alg.gen_element(alg.gen_index(name)); };
        Element want = Rational(2) * (g("c") * g("a") * g("t1") * g("t2") * g("t3"));
        bool class_ok = mr.w_class == cohomology(dga, mr.target_degree).class_coords(want);
        verdict("product model triple product is [2*c*a*t1*t2*t3]", class_ok,
                "representative " + render(mr.w));
        verdict("representative escapes the indeterminacy subspace", !mr.vanishes,
                "indeterminacy dimension " + std::to_string(mr.indeterminacy.dim()));

        PairingCertificate cert = certify_nonvanishing(mr, pm.dual);
        bool ind_clean = true;
        for (const auto& q : cert.indeterminacy_pairings)
            if (q != 0)
                ind_clean = false;
        verdict("pairing against the dual class equals -2", cert.pairing_value == -2,
                "pairing " + rat_str(cert.pairing_value) + " with dual " + render(pm.dual));
        verdict("every indeterminacy basis class pairs to zero", ind_clean,
                std::to_string(cert.indeterminacy_pairings.size()) + " pairings checked");
        verdict("certified nonzero mod indeterminacy", cert.certified, "");

        rep.massey = std::move(mr);
        rep.certificate = std::move(cert);
    } catch (const Error& e) {
        verdict("product model triple product is [2*c*a*t1*t2*t3]", false, e.what());
    }

    rep.pass = true;
    for (const auto& v : rep.verdicts)
        rep.pass = rep.pass && v.pass;
    return rep;
}

std::string render_report(const PaperReport& rep)
{
    std::ostringstream out;
    out << "verification report, dimension " << rep.dimension << "\n";
    out << "model: " << rep.model_description << "\n";
    out << "betti: " << join_ints(rep.betti) << "\n";
    if (rep.massey) {
        out << "massey representative: " << render(rep.massey->w) << "\n";
        out << "indeterminacy dimension: " << rep.massey->indeterminacy.dim() << "\n";
    }
    if (rep.certificate)
        out << "pairing: " << rat_str(rep.certificate->pairing_value) << "\n";
    out << "steps:\n";
    for (const auto& v : rep.verdicts) {
        out << "  [" << (v.pass ? "pass" : "FAIL") << "] " << v.name;
        if (!v.detail.empty())
            out << ": " << v.detail;
        out << "\n";
    }
    out << "note: the certificate is for the product model itself; carrying it to a closed\n"
           "simply connected manifold is a geometric surgery argument outside this tool\n";
    out << "overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace cdga
