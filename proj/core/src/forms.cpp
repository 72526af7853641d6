#include "fivol/forms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fivol::forms {

namespace {

Rational factorial(int k) {
    Rational r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

int popcount_below(std::uint32_t mask, int bit) {
    return std::popcount(mask & ((1u << bit) - 1u));
}

// Parity sign for sorting the concatenation (a, b) of two ascending index
// lists into one ascending list: (-1)^{#\{(i,j) in a x b : i > j\}}.
int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (std::uint32_t m = b; m; m &= m - 1) {
        int j = std::countr_zero(m);
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

// Sign of the permutation given as a vector of distinct ints.
int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// Sorts generator indices ascending and returns the sorting sign, or 0 if a
// repeated index makes the term vanish.
int canonicalize(std::vector<int>& gens) {
    int inv = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (gens[a] == gens[b]) return 0;
            if (gens[a] > gens[b]) ++inv;
        }
    std::sort(gens.begin(), gens.end());
    return (inv % 2 == 0) ? 1 : -1;
}

std::uint32_t mask_of(const std::vector<int>& gens) {
    std::uint32_t m = 0;
    for (int g : gens) m |= (1u << g);
    return m;
}

}  // namespace

// ---------------- Polynomial ----------------

Polynomial::Polynomial(Rational c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

Polynomial Polynomial::variable(int var) {
    Polynomial p;
    Monomial m{};
    m[var] = 1;
    p.terms_[m] = 1;
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int v = 0; v < kMaxVars; ++v) m[v] = std::uint8_t(ma[v] + mb[v]);
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Polynomial Polynomial::operator-() const { return (*this) * Rational(-1); }

Polynomial Polynomial::derivative(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * int(m[var]));
    }
    return r;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Rational>>& rows) const {
    const int nv = int(rows.size());
    // Linear forms per variable.
    std::vector<Polynomial> lin(nv);
    for (int v = 0; v < nv; ++v)
        for (int j = 0; j < nv; ++j)
            if (rows[v][j] != 0) lin[v] += Polynomial::variable(j) * rows[v][j];

    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial term{c};
        for (int v = 0; v < nv; ++v)
            for (int e = 0; e < int(m[v]); ++e) term = term * lin[v];
        result += term;
    }
    return result;
}

std::string Polynomial::str(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << c;
        for (int v = 0; v < kMaxVars; ++v)
            if (m[v] > 0) {
                os << (v < n ? "*x" : "*y") << (v < n ? v + 1 : v - n + 1);
                if (m[v] > 1) os << "^" << int(m[v]);
            }
        first = false;
    }
    return os.str();
}

// ---------------- Form ----------------

void Form::add(std::uint32_t mask, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator+(const Form& o) const {
    Form r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Form Form::operator-(const Form& o) const {
    Form r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

Form Form::operator*(const Rational& c) const {
    Form r(n_);
    if (c == 0) return r;
    for (const auto& [m, p] : terms_) r.add(m, p * c);
    return r;
}

bool Form::operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, p] : terms_) {
        os << (first ? "" : " + ") << "(" << p.str(n_) << ")";
        for (int g = 0; g < 2 * n_; ++g)
            if (mask & (1u << g)) os << (g < n_ ? " dx" : " dy") << (g < n_ ? g + 1 : g - n_ + 1);
        first = false;
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    if (a.half_dim() != b.half_dim()) throw std::invalid_argument("wedge: dimension mismatch");
    Form r(a.half_dim());
    for (const auto& [ma, pa] : a.terms())
        for (const auto& [mb, pb] : b.terms()) {
            if (ma & mb) continue;
            r.add(ma | mb, (pa * pb) * Rational(merge_sign(ma, mb)));
        }
    return r;
}

Form ext_d(const Form& a) {
    Form r(a.half_dim());
    const int nv = 2 * a.half_dim();
    for (const auto& [mask, p] : a.terms()) {
        for (int v = 0; v < nv; ++v) {
            if (mask & (1u << v)) continue;
            Polynomial dp = p.derivative(v);
            if (dp.is_zero()) continue;
            int sign = (popcount_below(mask, v) % 2 == 0) ? 1 : -1;
            r.add(mask | (1u << v), dp * Rational(sign));
        }
    }
    return r;
}

Form pullback_linear(const std::vector<std::vector<Rational>>& M, const Form& a) {
    const int nv = 2 * a.half_dim();
    if (int(M.size()) != nv) throw std::invalid_argument("pullback_linear: matrix size");
    Form r(a.half_dim());
    for (const auto& [mask, p] : a.terms()) {
        // Substitute the coordinates in the coefficient.
        Polynomial coeff = p.substitute_linear(M);
        // Expand the pulled-back generator product.
        std::vector<Form> factors;
        Form acc(a.half_dim());
        acc.add(0u, coeff);
        for (int g = 0; g < nv; ++g) {
            if (!(mask & (1u << g))) continue;
            Form dg(a.half_dim());
            for (int j = 0; j < nv; ++j)
                if (M[g][j] != 0) dg.add(1u << j, Polynomial{M[g][j]});
            acc = wedge(acc, dg);
        }
        r = r + acc;
    }
    return r;
}

Form scale(const Polynomial& p, const Form& a) {
    Form r(a.half_dim());
    for (const auto& [m, c] : a.terms()) r.add(m, p * c);
    return r;
}

// ---------------- invariant forms ----------------

Form form_alpha(int n) {
    Form f(n);
    for (int k = 0; k < n; ++k) f.add(1u << k, Polynomial::variable(n + k));
    return f;
}

Form form_beta(int n) {
    Form f(n);
    for (int k = 0; k < n; ++k) f.add(1u << (n + k), Polynomial::variable(k));
    return f;
}

Form form_gamma(int n) {
    Form f(n);
    for (int k = 0; k < n; ++k) f.add(1u << k, Polynomial::variable(k));
    return f;
}

Form form_omega_s(int n) {
    Form f(n);
    for (int k = 0; k < n; ++k) f.add((1u << k) | (1u << (n + k)), Polynomial{1});
    return f;
}

Form form_tau(int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("form_tau: need 0 <= i <= n-1");
    Form f(n);
    Rational norm = Rational(1) / (factorial(i) * factorial(n - i));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int sgn = permutation_sign(perm);
        std::vector<int> gens;
        gens.reserve(n - 1);
        for (int a = 2; a <= n - i; ++a) gens.push_back(perm[a - 1] - 1);
        for (int a = n - i + 1; a <= n; ++a) gens.push_back(n + perm[a - 1] - 1);
        int csign = canonicalize(gens);
        if (csign == 0) continue;
        f.add(mask_of(gens), Polynomial::variable(perm[0] - 1) * (norm * sgn * csign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

Form form_kappa(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("form_kappa: need 0 <= i <= n");
    Form f(n);
    Rational norm = Rational(1) / (factorial(i) * factorial(n - i));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int sgn = permutation_sign(perm);
        std::vector<int> gens;
        gens.reserve(n);
        for (int a = 1; a <= n - i; ++a) gens.push_back(perm[a - 1] - 1);
        for (int a = n - i + 1; a <= n; ++a) gens.push_back(n + perm[a - 1] - 1);
        int csign = canonicalize(gens);
        if (csign == 0) continue;
        f.add(mask_of(gens), Polynomial{norm * sgn * csign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

Form form_kappa_subsets(int n, int i) {
    // Coefficient of t^{n-i} in wedge_k (dy_k + t dx_k): for every subset S
    // of size n-i contributing dx on S and dy elsewhere, with the sign of the
    // permutation sorting (S asc, S^c asc shifted by n) -> ascending.
    Form f(n);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) != n - i) continue;
        // Walk positions 1..n in factor order; canonicalize carries the sign.
        std::vector<int> gens;
        for (int k = 0; k < n; ++k) gens.push_back((s & (1u << k)) ? k : n + k);
        int csign = canonicalize(gens);
        f.add(mask_of(gens), Polynomial{Rational(csign)});
    }
    return f;
}

Polynomial poly_r2(int n) {
    Polynomial p;
    for (int k = 0; k < n; ++k) p += Polynomial::variable(k) * Polynomial::variable(k);
    return p;
}

Polynomial poly_of_r2(int n, const std::vector<Rational>& p) {
    Polynomial r2 = poly_r2(n);
    Polynomial acc;
    Polynomial power{Rational(1)};
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0) acc += power * p[k];
        power = power * r2;
    }
    return acc;
}

std::vector<Rational> poly_derivative_coeffs(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * int(k));
    if (d.empty()) d.push_back(0);
    return d;
}

std::vector<std::vector<Rational>> shear_matrix(int n, const Rational& t) {
    std::vector<std::vector<Rational>> M(2 * n, std::vector<Rational>(2 * n, 0));
    for (int k = 0; k < n; ++k) {
        M[k][k] = 1;
        M[n + k][n + k] = 1;
        M[n + k][k] = t;
    }
    return M;
}

std::vector<std::vector<Rational>> diagonal_action(int n, const std::vector<std::vector<Rational>>& A) {
    std::vector<std::vector<Rational>> M(2 * n, std::vector<Rational>(2 * n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            M[r][c] = A[r][c];
            M[n + r][n + c] = A[r][c];
        }
    return M;
}

// ---------------- identity checker ----------------

IdentityReport check_identities(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("check_identities: need 2 <= n <= 4");
    IdentityReport rep;
    rep.n = n;
    auto record = [&rep](const std::string& name, int i, bool pass) {
        rep.checks.push_back({name, i, pass});
        rep.all_pass = rep.all_pass && pass;
    };

    const Form alpha = form_alpha(n);
    const Form beta = form_beta(n);
    const Form gamma = form_gamma(n);
    const Form omega = form_omega_s(n);
    const Polynomial r2 = poly_r2(n);
    std::vector<Form> tau, kappa;
    for (int i = 0; i <= n - 1; ++i) tau.push_back(form_tau(n, i));
    for (int i = 0; i <= n; ++i) kappa.push_back(form_kappa(n, i));

    // d alpha = -omega_s, d gamma = 0.
    record("d(alpha) = -omega_s", -1, ext_d(alpha) == omega * Rational(-1));
    record("d(gamma) = 0", -1, ext_d(gamma).is_zero());

    // d tau_i = kappa_i.
    for (int i = 0; i <= n - 1; ++i)
        record("d(tau_i) = kappa_i", i, ext_d(tau[i]) == kappa[i]);

    // r^2 kappa_i = (n-i) gamma^tau_i + (n-i+1) beta^tau_{i-1}, with the
    // boundary cases r^2 kappa_0 = gamma^tau_0 and r^2 kappa_n = beta^tau_{n-1}.
    record("r^2 kappa_0 = gamma^tau_0", 0, scale(r2, kappa[0]) == wedge(gamma, tau[0]));
    for (int i = 1; i <= n - 1; ++i) {
        Form rhs = wedge(gamma, tau[i]) * Rational(n - i) +
                   wedge(beta, tau[i - 1]) * Rational(n - i + 1);
        record("r^2 kappa_i = (n-i) gamma^tau_i + (n-i+1) beta^tau_{i-1}", i,
               scale(r2, kappa[i]) == rhs);
    }
    record("r^2 kappa_n = beta^tau_{n-1}", n, scale(r2, kappa[n]) == wedge(beta, tau[n - 1]));

    // Primitivity: (gamma^tau_i)^omega_s = 0 and (beta^tau_i)^omega_s = 0.
    for (int i = 0; i <= n - 1; ++i) {
        record("(gamma^tau_i)^omega_s = 0", i, wedge(wedge(gamma, tau[i]), omega).is_zero());
        record("(beta^tau_i)^omega_s = 0", i, wedge(wedge(beta, tau[i]), omega).is_zero());
    }

    // Radial-weight derivative identity, polynomial weight p(r^2), cleared of
    // the 1/(n-i) factor:
    //   (n-i) d(p(r^2) tau_i)
    //     = ((n-i) p(r^2) + 2 r^2 p'(r^2)) kappa_i - 2(n-i+1) p'(r^2) beta^tau_{i-1}.
    const std::vector<std::vector<Rational>> weights = {
        {Rational(0), Rational(1)},                             // p(s) = s
        {Rational(2), Rational(-3), Rational(1)},               // p(s) = s^2 - 3s + 2
    };
    for (const auto& pc : weights) {
        Polynomial p = poly_of_r2(n, pc);
        Polynomial dp = poly_of_r2(n, poly_derivative_coeffs(pc));
        for (int i = 1; i <= n - 1; ++i) {
            Form lhs = ext_d(scale(p, tau[i])) * Rational(n - i);
            Form rhs = scale(p * Rational(n - i) + r2 * dp * Rational(2), kappa[i]) -
                       scale(dp * Rational(2 * (n - i + 1)), wedge(beta, tau[i - 1]));
            record("(n-i) d(p(r^2)tau_i) = ((n-i)p + 2r^2 p')kappa_i - 2(n-i+1)p' beta^tau_{i-1}",
                   i, lhs == rhs);
        }
    }

    // phi(r^2) derivative identities.
    {
        const std::vector<Rational> pc = {Rational(2), Rational(-3), Rational(1)};
        Polynomial phi = poly_of_r2(n, pc);
        Polynomial dphi = poly_of_r2(n, poly_derivative_coeffs(pc));
        for (int i = 0; i <= n; ++i) {
            Form lhs = ext_d(scale(phi, kappa[i]));
            Form rhs = scale(dphi * Rational(2), wedge(gamma, kappa[i]));
            record("d(phi(r^2)kappa_i) = 2 phi'(r^2) gamma^kappa_i", i, lhs == rhs);
        }
        for (int i = 0; i <= n - 1; ++i) {
            Form lhs = ext_d(scale(dphi, wedge(gamma, tau[i])));
            Form rhs = scale(dphi, wedge(gamma, kappa[i])) * Rational(-1);
            record("d(phi'(r^2) gamma^tau_i) = -phi'(r^2) gamma^kappa_i", i, lhs == rhs);
        }
    }

    // Shear pullback: G_t^* kappa_n = sum_i t^{n-i} kappa_i.
    const std::vector<Rational> ts = {Rational(1), Rational(2), Rational(-1), Rational(1) / 2};
    for (const auto& t : ts) {
        Form lhs = pullback_linear(shear_matrix(n, t), kappa[n]);
        Form rhs(n);
        Rational tp = 1;
        for (int i = n; i >= 0; --i) {
            rhs = rhs + kappa[i] * tp;
            tp *= t;
        }
        std::ostringstream name;
        name << "G_t^* kappa_n = sum t^{n-i} kappa_i (t=" << t << ")";
        record(name.str(), -1, lhs == rhs);
    }

    // Negative controls; these must NOT vanish / NOT coincide.
    record("control: kappa_1 ^ omega_s != 0", 1, !wedge(kappa[1], omega).is_zero());
    {
        // The same derivative identity without the (n-i) scaling fails for
        // every 1 <= i <= n-1 once p' != 0.
        const std::vector<Rational> pc = {Rational(0), Rational(1)};
        Polynomial p = poly_of_r2(n, pc);
        Polynomial dp = poly_of_r2(n, poly_derivative_coeffs(pc));
        bool all_differ = true;
        for (int i = 1; i <= n - 1; ++i) {
            Form lhs = ext_d(scale(p, tau[i]));
            Form rhs = scale(p + r2 * dp * Rational(2), kappa[i]) -
                       scale(dp * Rational(2), wedge(beta, tau[i - 1]));
            all_differ = all_differ && !(lhs == rhs);
        }
        record("control: unscaled d(p(r^2)tau_i) variant differs", -1, all_differ);
    }

    return rep;
}

}  // namespace fivol::forms
