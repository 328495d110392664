#include "maxtoric/maxent/root_isolation.hpp"

#include "maxtoric/error.hpp"

#include <algorithm>
#include <utility>

namespace maxtoric::maxent {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense derivative(const Dense& p) {
    Dense d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Dense q(a.size() - b.size() + 1);
    for (std::size_t k = a.size() - 1;; --k) {
        const Rational c = a[k] / b.back();
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
        if (k == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

Rational eval(const Dense& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

int sign(const Rational& q) { return sgn(q); }

std::vector<Dense> sturm_sequence(const Dense& p) {
    std::vector<Dense> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    if (seq.back().empty()) seq.pop_back();
    return seq;
}

int variations(const std::vector<Dense>& seq, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
        const int v = sign(eval(s, x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

Rational floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo <= 0 || hi < lo) throw ArgumentError("simplest_rational_between needs 0 < lo <= hi");
    const Rational fl = floor_of(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    // lo, hi share the integer part: recurse on the reciprocal fractional parts.
    const Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
    return fl + 1 / inner;
}

std::vector<RealRoot> positive_real_roots(std::span<const Rational> coeffs, double width) {
    Dense p(coeffs.begin(), coeffs.end());
    trim(p);
    if (p.empty()) throw ArgumentError("root isolation of the zero polynomial");
    // Roots at zero are not positive.
    auto first = std::find_if(p.begin(), p.end(), [](const Rational& c) { return c != 0; });
    p.erase(p.begin(), first);
    if (p.size() < 2) return {};

    Dense squarefree = divmod(p, gcd(p, derivative(p))).first;
    const auto seq = sturm_sequence(squarefree);

    Rational bound = 0;
    for (std::size_t k = 0; k + 1 < squarefree.size(); ++k)
        bound = std::max(bound, Rational(abs(squarefree[k] / squarefree.back())));
    bound += 1;

    const Rational tolerance(width);
    std::vector<RealRoot> roots;
    // Depth-first over (lo, hi], left half first so roots come out ascending.
    std::vector<std::pair<Rational, Rational>> stack{{Rational(0), bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int count = variations(seq, lo) - variations(seq, hi);
        if (count == 0) continue;
        if (count > 1) {
            const Rational mid = (lo + hi) / 2;
            stack.emplace_back(mid, hi);
            stack.emplace_back(lo, mid);
            continue;
        }

        RealRoot root;
        const int sign_hi = sign(eval(squarefree, hi));
        if (sign_hi == 0) {
            root.exact = hi;
            lo = hi;
        } else {
            const Rational scale = std::max(Rational(1), hi);
            while (hi - lo > tolerance * scale) {
                const Rational mid = (lo + hi) / 2;
                const int s = sign(eval(squarefree, mid));
                if (s == 0) {
                    root.exact = mid;
                    lo = hi = mid;
                    break;
                }
                (s == sign_hi ? hi : lo) = mid;
            }
            if (!root.exact && lo > 0) {
                const Rational candidate = simplest_rational_between(lo, hi);
                if (eval(squarefree, candidate) == 0) root.exact = candidate;
            }
        }
        root.lower = lo;
        root.upper = hi;
        root.value = root.exact ? root.exact->get_d() : Rational((lo + hi) / 2).get_d();
        roots.push_back(std::move(root));
    }
    return roots;
}

}  // namespace maxtoric::maxent
