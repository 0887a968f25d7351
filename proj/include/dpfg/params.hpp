#pragma once

// Family vocabulary and evaluation parameters shared by the library, the
// command line and the audit.  Every computable family has a stable
// kebab-case name; the metadata table records which parameters a family
// consumes so front ends can validate requests uniformly.

#include "dpfg/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpfg {

// Tool version, stamped into audit reports and the CLI --version output.
inline constexpr const char* kVersion = "1.0.0";

enum class FamilyId {
    DegFalling,
    Falling,
    DegExp,
    DegLog,
    Stirling1Deg,
    Stirling2Deg,
    Stirling2DegPoly,
    Bernoulli2Deg,
    Polyexp,
    DegPolyexp,
    CosDeg,
    SinDeg,
    DegFrobeniusEuler,
    DegGenocchi,
    DegFrobeniusGenocchi,
    PolyFG,
    PolyFGComplex,
    PolyFGCos,
    PolyFGSin,
    CPoly,
    SPoly,
    ClassicalFrobeniusEuler,
    ClassicalGenocchi,
    ClassicalFrobeniusGenocchi,
    ClassicalStirling1,
    ClassicalStirling2,
    ClassicalStirling2Poly,
    ClassicalBernoulli2,
    ClassicalC,
    ClassicalS,
    ClassicalPolyFG,
};

// Role of the integer parameter k for a family: absent, the "poly" order of
// a polyexponential-built family, or a second (column) index as for Stirling
// numbers.
enum class KRole { None, PolyOrder, SecondIndex };

struct FamilyInfo {
    FamilyId id;
    const char* name;
    bool uses_lambda;
    bool uses_u;
    bool uses_x;
    bool uses_y;
    KRole k_role;
    bool gaussian_valued;
    bool has_series;       // has a generating-series form at fixed parameters
    const char* summary;
};

inline const std::array<FamilyInfo, 31>& family_table() {
    using F = FamilyId;
    static const std::array<FamilyInfo, 31> table = {{
        {F::DegFalling, "deg-falling", true, false, true, false, KRole::None, false, false,
         "generalized falling factorial (x)_{n,lambda}"},
        {F::Falling, "falling", false, false, true, false, KRole::None, false, false,
         "ordinary falling factorial (x)_n"},
        {F::DegExp, "deg-exp", true, false, true, false, KRole::None, false, true,
         "degenerate exponential e_lambda^x(t)"},
        {F::DegLog, "deg-log", true, false, false, false, KRole::None, false, true,
         "degenerate logarithm log_lambda(1+t)"},
        {F::Stirling1Deg, "stirling1-deg", true, false, false, false, KRole::SecondIndex, false, true,
         "degenerate Stirling numbers of the first kind"},
        {F::Stirling2Deg, "stirling2-deg", true, false, false, false, KRole::SecondIndex, false, true,
         "degenerate Stirling numbers of the second kind"},
        {F::Stirling2DegPoly, "stirling2-deg-poly", true, false, true, false, KRole::SecondIndex, false, true,
         "degenerate Stirling polynomials of the second kind"},
        {F::Bernoulli2Deg, "bernoulli2-deg", true, false, true, false, KRole::None, false, true,
         "degenerate Bernoulli polynomials of the second kind"},
        {F::Polyexp, "polyexp", false, false, false, false, KRole::PolyOrder, false, true,
         "polyexponential function of index k"},
        {F::DegPolyexp, "deg-polyexp", true, false, false, false, KRole::PolyOrder, false, true,
         "modified degenerate polyexponential function of index k"},
        {F::CosDeg, "cos-deg", true, false, false, true, KRole::None, false, true,
         "degenerate cosine series of e_lambda^{iy}"},
        {F::SinDeg, "sin-deg", true, false, false, true, KRole::None, false, true,
         "degenerate sine series of e_lambda^{iy}"},
        {F::DegFrobeniusEuler, "deg-frobenius-euler", true, true, true, false, KRole::None, false, true,
         "degenerate Frobenius-Euler polynomials"},
        {F::DegGenocchi, "deg-genocchi", true, false, true, false, KRole::None, false, true,
         "degenerate Genocchi polynomials"},
        {F::DegFrobeniusGenocchi, "deg-frobenius-genocchi", true, true, true, false, KRole::None, false, true,
         "degenerate Frobenius-Genocchi polynomials"},
        {F::PolyFG, "poly-fg", true, true, true, false, KRole::PolyOrder, false, true,
         "degenerate poly-Frobenius-Genocchi polynomials"},
        {F::PolyFGComplex, "poly-fg-complex", true, true, true, true, KRole::PolyOrder, true, true,
         "degenerate poly-Frobenius-Genocchi polynomials at x+iy"},
        {F::PolyFGCos, "poly-fg-cos", true, true, true, true, KRole::PolyOrder, false, true,
         "cosine degenerate poly-Frobenius-Genocchi polynomials"},
        {F::PolyFGSin, "poly-fg-sin", true, true, true, true, KRole::PolyOrder, false, true,
         "sine degenerate poly-Frobenius-Genocchi polynomials"},
        {F::CPoly, "c-poly", true, false, true, true, KRole::None, false, true,
         "two-parameter degenerate cosine polynomials"},
        {F::SPoly, "s-poly", true, false, true, true, KRole::None, false, true,
         "two-parameter degenerate sine polynomials"},
        {F::ClassicalFrobeniusEuler, "classical-frobenius-euler", false, true, true, false, KRole::None, false, true,
         "Frobenius-Euler polynomials"},
        {F::ClassicalGenocchi, "classical-genocchi", false, false, true, false, KRole::None, false, true,
         "Genocchi polynomials"},
        {F::ClassicalFrobeniusGenocchi, "classical-frobenius-genocchi", false, true, true, false, KRole::None, false, true,
         "Frobenius-Genocchi polynomials"},
        {F::ClassicalStirling1, "classical-stirling1", false, false, false, false, KRole::SecondIndex, false, true,
         "signed Stirling numbers of the first kind"},
        {F::ClassicalStirling2, "classical-stirling2", false, false, false, false, KRole::SecondIndex, false, true,
         "Stirling numbers of the second kind"},
        {F::ClassicalStirling2Poly, "classical-stirling2-poly", false, false, true, false, KRole::SecondIndex, false, true,
         "Stirling polynomials of the second kind"},
        {F::ClassicalBernoulli2, "classical-bernoulli2", false, false, true, false, KRole::None, false, true,
         "Bernoulli polynomials of the second kind"},
        {F::ClassicalC, "classical-c", false, false, true, true, KRole::None, false, true,
         "cosine polynomials C_n(x,y)"},
        {F::ClassicalS, "classical-s", false, false, true, true, KRole::None, false, true,
         "sine polynomials S_n(x,y)"},
        {F::ClassicalPolyFG, "classical-poly-fg", false, true, true, false, KRole::PolyOrder, false, true,
         "poly-Frobenius-Genocchi polynomials"},
    }};
    return table;
}

inline const FamilyInfo& family_info(FamilyId id) {
    for (const auto& info : family_table())
        if (info.id == id) return info;
    throw std::logic_error("family_info: unknown family id");
}

inline std::optional<FamilyId> family_from_name(std::string_view name) {
    for (const auto& info : family_table())
        if (name == info.name) return info.id;
    return std::nullopt;
}

inline std::string family_name(FamilyId id) { return family_info(id).name; }

// Evaluation parameters.  Which fields are meaningful depends on the family;
// validate_for enforces the family's domain restrictions.
struct ParamSet {
    Rational lambda{1};
    Rational u{-1};
    Rational x{0};
    Rational y{0};
    long long k{1};
    int n_max{0};
};

inline void validate_for(FamilyId id, const ParamSet& p) {
    const FamilyInfo& info = family_info(id);
    if (info.uses_lambda && p.lambda.is_zero())
        throw std::domain_error("lambda: must be nonzero (the deformation limit is a separate classical family)");
    if (info.uses_u && p.u == Rational(1))
        throw std::domain_error("u: must not equal 1");
    if (info.k_role == KRole::SecondIndex && p.k < 0)
        throw std::domain_error("k: second index must be nonnegative");
    if (p.n_max < 0)
        throw std::domain_error("n-max: must be nonnegative");
}

// Working order used when a caller asks for indices up to n_max without
// specifying one: enough headroom that every audit right side, including the
// convolution-of-two-series kind, is exact at n_max.
inline int default_order(int n_max) { return 2 * n_max + 2; }

}  // namespace dpfg
