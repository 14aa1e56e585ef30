#pragma once

#include "cdga/dga.hpp"
#include "cdga/massey.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdga {

// Heisenberg nilmanifold model: generators a, b, c of degree 1 with
// d a = d b = 0, d c = -a*b.
Dga heisenberg_model();

// n-torus model: degree-1 generators t1..tn, zero differential. n >= 1.
Dga torus_model(int n);

// Product model heisenberg x torus(dim-3) for dim 7 or 8, with the named
// degree-2 classes a*t1, b*t2, a*t3 and the dual class used by the
// non-vanishing certificate (b*t4*t5 in dimension 8, b*t4 in dimension 7).
struct ProductModel {
    int dimension = 0;
    Dga dga;
    Element a1, b2, a3;  // a*t1, b*t2, a*t3
    Element dual;
};
ProductModel paper_x(int dim);

struct StepVerdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PaperReport {
    int dimension = 0;
    std::string model_description;
    std::vector<int> betti;
    std::optional<MasseyResult> massey;
    std::optional<PairingCertificate> certificate;
    std::vector<StepVerdict> verdicts;
    bool pass = false;  // iff every step verdict passes
};

// One-shot verification pipeline for dim 7 or 8: model validation, Betti and
// duality checks, the degree-1 Massey product on the Heisenberg factor, the
// degree-2 Massey product on the product model, its indeterminacy, and the
// pairing certificate against the dual class. Verification failures are
// report verdicts; only an unsupported dimension throws.
PaperReport verify_paper(int dim);

// Deterministic human-readable rendering (byte-identical across runs).
std::string render_report(const PaperReport& report);

}  // namespace cdga
