#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fivol::forms {

using Rational = boost::multiprecision::cpp_rational;

/// Generators are indexed 0..2n-1: dx_1..dx_n are 0..n-1, dy_1..dy_n are
/// n..2n-1. Coefficients are polynomials in the matching coordinates
/// x_1..x_n, y_1..y_n with the same index convention.
constexpr int kMaxVars = 8;  // n <= 4

using Monomial = std::array<std::uint8_t, kMaxVars>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational c);
    static Polynomial variable(int var);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial derivative(int var) const;
    /// Substitute each variable v by the linear form sum_j rows[v][j] * z_j.
    Polynomial substitute_linear(const std::vector<std::vector<Rational>>& rows) const;

    void add_term(const Monomial& m, const Rational& c);
    std::string str(int n) const;

private:
    std::map<Monomial, Rational> terms_;
};

/// Exterior-algebra element over the 2n generators with polynomial
/// coefficients. Terms are keyed by the generator subset bitmask; the
/// ascending-index orientation is the canonical one.
class Form {
public:
    explicit Form(int n = 0) : n_(n) {}

    int half_dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint32_t, Polynomial>& terms() const { return terms_; }

    void add(std::uint32_t mask, const Polynomial& coeff);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Rational& c) const;
    bool operator==(const Form& o) const;

    std::string str() const;

private:
    int n_;
    std::map<std::uint32_t, Polynomial> terms_;
};

Form wedge(const Form& a, const Form& b);
Form ext_d(const Form& a);
/// Pullback along the linear map z -> M z (M given by rows, size 2n x 2n).
Form pullback_linear(const std::vector<std::vector<Rational>>& M, const Form& a);
/// Multiply every coefficient by a polynomial.
Form scale(const Polynomial& p, const Form& a);

// ---- the invariant forms ----
Form form_alpha(int n);    // sum y_k dx_k
Form form_beta(int n);     // sum x_k dy_k
Form form_gamma(int n);    // sum x_k dx_k
Form form_omega_s(int n);  // sum dx_k ^ dy_k
Form form_tau(int n, int i);    // 0 <= i <= n-1
Form form_kappa(int n, int i);  // 0 <= i <= n, permutation-sum definition
/// Independent construction: kappa_i as the coefficient of t^{n-i} in
/// wedge_k (dy_k + t dx_k), expanded subset by subset.
Form form_kappa_subsets(int n, int i);
Polynomial poly_r2(int n);  // |x|^2
/// p(r^2) for p given by coefficients (p[k] multiplies s^k).
Polynomial poly_of_r2(int n, const std::vector<Rational>& p);
std::vector<Rational> poly_derivative_coeffs(const std::vector<Rational>& p);

/// Matrix of the shear G_t(x,y) = (x, y + t x).
std::vector<std::vector<Rational>> shear_matrix(int n, const Rational& t);
/// Block-diagonal matrix acting by the same n x n matrix on x and on y.
std::vector<std::vector<Rational>> diagonal_action(int n, const std::vector<std::vector<Rational>>& A);

// ---- identity checker ----
struct IdentityCheck {
    std::string name;
    int i = -1;  // -1 when not indexed by i
    bool pass = false;
};

struct IdentityReport {
    int n = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

/// Exact verification of the invariant-form identities for 2 <= n <= 4:
/// the r^2 kappa_i decomposition, primitivity of gamma^tau_i and beta^tau_i,
/// d tau_i = kappa_i, d alpha = -omega_s, the radial-weight derivative
/// identities (with the corrected (n-i)-scaling), the phi(r^2) derivative
/// identities, and the shear pullback expansion at t in {1, 2, -1, 1/2}.
/// Also runs negative controls that must come out nonzero/unequal.
IdentityReport check_identities(int n);

}  // namespace fivol::forms
