#include "hopfseq/transforms.hpp"

#include "hopfseq/compositions.hpp"
#include "hopfseq/errors.hpp"

namespace hopfseq {

Sequence invert(const Sequence& a) {
    int n_max = a.degree();
    Sequence h = Sequence::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat sum = a.at(n);
        for (int k = 1; k < n; ++k) sum += a.at(k) * h.at(n - k);
        h.at(n) = sum;
    }
    return h;
}

Sequence inverti(const Sequence& h) {
    int n_max = h.degree();
    Sequence a = Sequence::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat sum = h.at(n);
        for (int k = 1; k < n; ++k) sum -= a.at(k) * h.at(n - k);
        a.at(n) = sum;
    }
    return a;
}

namespace {

// Coefficients of the series logarithm: log(1 + sum h_k t^k) = sum (c_n/n) t^n,
// computed by c_n = n h_n - sum_{k=1}^{n-1} c_k h_{n-k}.
Sequence log_coefficients(const Sequence& h) {
    int n_max = h.degree();
    Sequence c = Sequence::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat sum = Rat(n) * h.at(n);
        for (int k = 1; k < n; ++k) sum -= c.at(k) * h.at(n - k);
        c.at(n) = sum;
    }
    return c;
}

} // namespace

Sequence euler(const Sequence& p) {
    int n_max = p.degree();
    Sequence h = Sequence::zeros(n_max);
    Sequence c = Sequence::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat cn(0);
        for (int d : divisors(n)) cn += Rat(d) * p.at(d);
        c.at(n) = cn;
        Rat sum = cn;
        for (int k = 1; k < n; ++k) sum += c.at(k) * h.at(n - k);
        h.at(n) = sum / Rat(n);
    }
    return h;
}

Sequence euleri(const Sequence& h) {
    int n_max = h.degree();
    Sequence c = log_coefficients(h);
    Sequence p = Sequence::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat sum(0);
        for (int d : divisors(n)) sum += Rat(mobius(n / d)) * c.at(d);
        p.at(n) = sum / Rat(n);
    }
    if (h.is_integral() && !p.is_integral())
        throw Error(Errc::internal_error,
                    "inverse Euler transform of integral input produced non-integral entries: " +
                        p.str());
    return p;
}

Sequence a_to_p(const Sequence& a) { return euleri(invert(a)); }

Sequence p_to_a(const Sequence& p) { return inverti(euler(p)); }

} // namespace hopfseq
