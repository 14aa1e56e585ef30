#include "cdga/minimal_model.hpp"

#include "cdga/cohomology.hpp"

#include <map>

namespace cdga {

bool is_minimal(const Dga& dga)
{
    for (int i = 0; i < dga.algebra().gen_count(); ++i)
        for (const auto& [m, c] : dga.gen_differential(i).terms())
            if (m.word_length() < 2)
                return false;
    return true;
}

namespace {

// Copy an element into a larger algebra whose generator list extends the
// original one (indices are preserved).
Element re_embed(const Algebra& to, const Element& u)
{
    Element out = to.zero();
    for (const auto& [m, c] : u.terms())
        out = out + to.element(m, c);
    return out;
}

Element apply_images(const Algebra& target_alg, const std::vector<Element>& images, const Element& u)
{
    Element out = target_alg.zero();
    for (const auto& [m, c] : u.terms()) {
        Element acc = c * target_alg.unit();
        for (const auto& [g, e] : m.factors)
            for (int t = 0; t < e; ++t)
                acc = acc * images[g];
        out = out + acc;
    }
    return out;
}

}  // namespace

Element apply_morphism(const MinimalModelResult& res, const Element& u)
{
    if (!u.algebra().same(res.model.algebra()))
        throw Error("element does not belong to the model algebra");
    return apply_images(res.target.algebra(), res.images, u);
}

MinimalModelResult minimal_model(const Dga& dga, int cutoff)
{
    if (is_minimal(dga)) {
        std::vector<Element> ids;
        for (int i = 0; i < dga.algebra().gen_count(); ++i)
            ids.push_back(dga.algebra().gen_element(i));
        return MinimalModelResult{dga, dga, std::move(ids), cutoff};
    }
    if (cohomology(dga, 1).dim() != 0)
        throw Error("minimal model construction requires vanishing degree-1 cohomology");

    std::vector<GeneratorSpec> gens;
    std::vector<Element> diffs;   // differentials, in the current model algebra
    std::vector<Element> images;  // generator images in the target
    Algebra malg(gens);
    Dga model(malg, {});
    std::map<int, int> names_used;  // per-degree counter for generator names

    auto rebuild = [&]() {
        Algebra fresh(gens);
        std::vector<Element> fresh_diffs;
        fresh_diffs.reserve(diffs.size());
        for (const auto& u : diffs)
            fresh_diffs.push_back(re_embed(fresh, u));
        diffs = std::move(fresh_diffs);
        malg = fresh;
        model = Dga(malg, diffs);
    };

    auto phi = [&](const Element& u) { return apply_images(dga.algebra(), images, u); };

    auto add_gen = [&](int degree, Element diff, Element image) {
        gens.push_back({"v" + std::to_string(degree) + "_" + std::to_string(names_used[degree]++), degree});
        diffs.push_back(std::move(diff));
        images.push_back(std::move(image));
    };

    for (int k = 2; k <= cutoff; ++k) {
        // Adjoin closed generators until the image covers H^k of the target.
        const auto& ha = cohomology(dga, k);
        {
            const auto& hm = cohomology(model, k);
            std::vector<std::vector<Rational>> image_classes;
            for (const auto& rep : hm.representatives)
                image_classes.push_back(ha.class_coords(phi(rep)));
            Subspace covered = Subspace::span(ha.dim(), image_classes);
            for (int i = 0; i < ha.dim(); ++i) {
                std::vector<Rational> e(ha.dim(), Rational(0));
                e[i] = 1;
                if (covered.contains(e))
                    continue;
                covered = covered.sum(Subspace::span(ha.dim(), {e}));
                add_gen(k, malg.zero(), ha.representatives[i]);
            }
            rebuild();
        }

        // Kill the kernel of the induced map one degree up. The adjoined
        // generators have degree k, so they change nothing at or below
        // degree k and make the kernel classes exact in degree k+1.
        {
            const auto& hm1 = cohomology(model, k + 1);
            const auto& ha1 = cohomology(dga, k + 1);
            RatMatrix mat(ha1.dim(), hm1.dim());
            for (int j = 0; j < hm1.dim(); ++j) {
                auto col = ha1.class_coords(phi(hm1.representatives[j]));
                for (int r = 0; r < ha1.dim(); ++r)
                    mat.at(r, j) = std::move(col[r]);
            }
            std::vector<Element> zs, xis;
            Subspace ker = kernel(mat);
            for (const auto& kv : ker.basis()) {
                Element z = hm1.element_from_class(kv);
                auto xi = is_exact(dga, phi(z));
                if (!xi)
                    throw Error("internal: image of a kernel class is not exact");
                zs.push_back(std::move(z));
                xis.push_back(std::move(*xi));
            }
            for (size_t t = 0; t < zs.size(); ++t)
                add_gen(k, std::move(zs[t]), std::move(xis[t]));
            rebuild();
        }
    }

    return MinimalModelResult{model, dga, std::move(images), cutoff};
}

bool check_quasi_iso(const MinimalModelResult& res)
{
    const Dga& model = res.model;
    const Dga& target = res.target;
    if (static_cast<int>(res.images.size()) != model.algebra().gen_count())
        return false;
    for (int i = 0; i < model.algebra().gen_count(); ++i)
        if (!(apply_morphism(res, model.gen_differential(i)) == target.d(res.images[i])))
            return false;
    for (int k = 0; k <= res.cutoff; ++k) {
        const auto& hm = cohomology(model, k);
        const auto& ha = cohomology(target, k);
        if (hm.dim() != ha.dim())
            return false;
        RatMatrix mat(ha.dim(), hm.dim());
        for (int j = 0; j < hm.dim(); ++j) {
            auto col = ha.class_coords(apply_morphism(res, hm.representatives[j]));
            for (int r = 0; r < ha.dim(); ++r)
                mat.at(r, j) = std::move(col[r]);
        }
        if (rank(mat) != ha.dim())
            return false;
    }
    return true;
}

}  // namespace cdga
