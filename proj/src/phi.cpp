#include "frogbounds/phi.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace frogbounds {

namespace {

constexpr int kDirectCap = 2000;

void require_positive_base(const BranchRatio& b, const char* who) {
    if (b.value() == 0.0)
        throw std::domain_error(std::string(who) + " requires b > 0");
}

double phi_recurrence_raw(int n, double b) {
    if (n == 0) return 1.0;
    const double a = b * (2.0 - b * b);
    const double c = b * b * b * (1.0 - b);
    double prev = 1.0;  // phi_0
    double cur = b;     // phi_1
    for (int k = 2; k <= n; ++k) {
        const double next = a * cur - c * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

double phi_direct(int n, const BranchRatio& br) {
    if (n < 1 || n > kDirectCap)
        throw std::domain_error("phi_direct requires 1 <= n <= " + std::to_string(kDirectCap));
    const double b = br.value();
    if (n == 1) return b;
    if (n == 2) return b * b * (2.0 - b);
    // phi[m] = b^m + sum over the first index l the prefix walk fails to
    // clear: l = 1 contributes b(1-b) phi[m-1]; 2 <= l <= m-1 contributes
    // b^l (1-b) (phi[m-l+1] + (1-b) phi[m-l]).
    std::vector<double> phi(static_cast<size_t>(n) + 1);
    phi[0] = 1.0;
    phi[1] = b;
    phi[2] = b * b * (2.0 - b);
    for (int m = 3; m <= n; ++m) {
        double acc = b * (1.0 - b) * phi[m - 1];
        double pw = b;  // b^l
        for (int l = 2; l <= m - 1; ++l) {
            pw *= b;
            acc += pw * (1.0 - b) * (phi[m - l + 1] + (1.0 - b) * phi[m - l]);
        }
        pw *= b;  // now b^m
        phi[m] = acc + pw;
    }
    return phi[n];
}

double phi_recurrence(int n, const BranchRatio& b) {
    if (n < 0) throw std::domain_error("phi_recurrence requires n >= 0");
    return phi_recurrence_raw(n, b.value());
}

double phi_closed(int n, const BranchRatio& br) {
    if (n < 0) throw std::domain_error("phi_closed requires n >= 0");
    const double b = br.value();
    const double ps = psi(br);
    // Same value as b^n/(2^{n+1} psi) [(psi-b^2)(2-b^2-psi)^n + (psi+b^2)(2-b^2+psi)^n],
    // with the n-th powers folded together so neither factor overflows.
    const double lm = 0.5 * b * (2.0 - b * b - ps);
    const double lp = 0.5 * b * (2.0 - b * b + ps);
    const double c1 = (ps - b * b) / (2.0 * ps);
    const double c2 = (ps + b * b) / (2.0 * ps);
    return c1 * std::pow(lm, n) + c2 * std::pow(lp, n);
}

double phi(PhiForm form, int n, const BranchRatio& b) {
    switch (form) {
        case PhiForm::Direct: return phi_direct(n, b);
        case PhiForm::Recurrence: return phi_recurrence(n, b);
        case PhiForm::Closed: return phi_closed(n, b);
    }
    throw std::invalid_argument("unknown PhiForm");
}

CharRoots char_roots(const BranchRatio& br) {
    require_positive_base(br, "char_roots");
    const double b = br.value();
    const double ps = psi(br);
    CharRoots out{};
    out.lambda_minus = 0.5 * b * (2.0 - b * b - ps);
    out.lambda_plus = 0.5 * b * (2.0 - b * b + ps);
    out.delta0 = b * b * (4.0 - 4.0 * b + b * b * b * b);
    out.c1 = (ps - b * b) / (2.0 * ps);
    out.c2 = (ps + b * b) / (2.0 * ps);
    return out;
}

double log_phi_scaled(int n, const BranchRatio& br) {
    if (n < 1) throw std::domain_error("log_phi_scaled requires n >= 1");
    require_positive_base(br, "log_phi_scaled");
    const double b = br.value();
    // log phi_n = log phi_1 + sum_k log(phi_k / phi_{k-1}); the ratio obeys
    // q_k = A - B / q_{k-1} and stays in a tight interval, so the sum never
    // sees the underflow that kills phi_n directly.
    const double A = b * (2.0 - b * b);
    const double B = b * b * b * (1.0 - b);
    double log_sum = std::log(b);
    double inv_ratio = 1.0 / b;  // phi_{k-1} / phi_k for k = 1
    for (int k = 2; k <= n; ++k) {
        const double q = A - B * inv_ratio;
        log_sum += std::log(q);
        inv_ratio = 1.0 / q;
    }
    return log_sum / n;
}

double f_n(Degree d, int n, Probability p) {
    if (n < 1) throw std::domain_error("f_n requires n >= 1");
    const double inv_d = 1.0 / d.value();
    const BranchRatio b = beta(d, p);
    if (b.value() == 0.0) return -inv_d;
    if (n <= 50) return std::pow(phi_recurrence_raw(n, b.value()), 1.0 / n) - inv_d;
    return std::exp(log_phi_scaled(n, b)) - inv_d;
}

double f_limit(Degree d, Probability p) {
    return lambda_growth(beta(d, p)) - 1.0 / d.value();
}

}  // namespace frogbounds
