#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcone/apery.hpp"
#include "tcone/ideals.hpp"
#include "tcone/ladder.hpp"
#include "tcone/semigroup.hpp"

namespace tcone {

/// Torsion summand (F / (x*)^c F)(-b).
using TorsionSummand = LadderStep;

/*
 * The tangent cone G of k[[S]] as a graded module over the fiber cone F of
 * (t^e): one free summand per column of the Apery table plus one torsion box
 * per true landing.
 */
struct TangentConeDecomposition {
    Value e = 1;
    int r = 0;
    /// Sorted; column 0 contributes degree 0.
    std::vector<int> free_degrees;
    /// Sorted by (b, c).
    std::vector<TorsionSummand> torsion;
    /// d_i for each column i (entry 0 is 0).
    std::vector<int> column_degrees;
    /// Torsion boxes per column, in landing order.
    std::vector<std::vector<TorsionSummand>> column_torsion;

    std::map<int, int> alpha;
    std::map<std::pair<int, int>, int> alpha_torsion;
    std::map<int, int> betti0;
    std::map<int, int> betti1;
};

TangentConeDecomposition decompose(const AperyTable& table);
TangentConeDecomposition decompose(const NumericalSemigroup& s);

struct AlphaInvariants {
    std::map<int, int> alpha;
    std::map<std::pair<int, int>, int> alpha_torsion;
};

struct BettiNumbers {
    std::map<int, int> betti0;
    std::map<int, int> betti1;
};

AlphaInvariants alpha_invariants(const TangentConeDecomposition& d);
BettiNumbers betti_numbers(const TangentConeDecomposition& d);

/// dim_k m^n / m^{n+1}.
Value hilbert_function(const TangentConeDecomposition& d, int n);

bool is_cohen_macaulay(const TangentConeDecomposition& d);

/// Class of t^a in degree n, spanning the F-torsion of G.
struct TorsionMonomial {
    std::size_t column = 0;
    int degree = 0;
    Value exponent = 0;
    /// Length c of the box containing it.
    int box_length = 0;
    /// Degree b generating that box.
    int box_degree = 0;

    friend bool operator==(const TorsionMonomial&, const TorsionMonomial&) = default;
};

/// Ordered by (column, degree).
std::vector<TorsionMonomial> torsion_monomials(const AperyTable& table, const TangentConeDecomposition& d);

struct BuchsbaumCertificate {
    enum class Kind {
        /// A box with c > 1: x* times its generator is still nonzero.
        TorsionExponent,
        /// (t^g)* (t^a)* = (t^{a+g})* is nonzero in degree n + 1.
        Product,
    };

    Kind kind = Kind::Product;
    Value a = 0;
    Value g = 0;
    int degree = 0;
    TorsionSummand box;

    Value product() const noexcept { return a + g; }
};

struct BuchsbaumResult {
    enum class Route { CohenMacaulay, TorsionExponent, SingleBox, ProductTest };

    bool buchsbaum = true;
    Route route = Route::CohenMacaulay;
    std::optional<BuchsbaumCertificate> certificate;
};

enum class BuchsbaumMode {
    /// Decide through the cheap necessary/sufficient conditions first.
    Fast,
    /// Always run the product test over every torsion monomial.
    ProductTestOnly,
};

/*
 * G is Buchsbaum iff G_+ annihilates the torsion T(G).  G is generated in
 * degree 1 and T(G) has a monomial basis, so it suffices that every product
 * (t^g)* (t^a)* vanishes, g a minimal generator and (n, a) a torsion
 * monomial; that product is nonzero exactly when ord(a + g) = n + 1.
 */
BuchsbaumResult is_buchsbaum(const NumericalSemigroup& s, const AperyTable& table,
                             const TangentConeDecomposition& d, IdealChain& chain,
                             BuchsbaumMode mode = BuchsbaumMode::Fast);
BuchsbaumResult is_buchsbaum(const NumericalSemigroup& s, const AperyTable& table,
                             const TangentConeDecomposition& d, BuchsbaumMode mode = BuchsbaumMode::Fast);

enum class Notation { Unicode, Ascii };

/// "F ⊕ F(-1)^2 ⊕ (F/x^3F)(-2)", or "F + F(-1)^2 + F/x^3(-2)" in ASCII.
std::string render(const TangentConeDecomposition& d, Notation notation = Notation::Unicode);

}  // namespace tcone
