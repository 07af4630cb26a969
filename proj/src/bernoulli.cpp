#include "eulersum/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace eulersum {

namespace {
std::mutex g_bern_mutex;
std::vector<BigRational> g_bern{BigRational(1)};
}  // namespace

BigRational bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    while (static_cast<long>(g_bern.size()) <= n) {
        long m = static_cast<long>(g_bern.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
        BigRational s(0);
        for (long k = 0; k < m; ++k) {
            if (k > 1 && k % 2 == 1) continue;  // odd Bernoulli numbers vanish
            s += BigRational(binom(m + 1, k)) * g_bern[k];
        }
        g_bern.push_back(-s / BigRational(m + 1));
    }
    return g_bern[n];
}

BigRational genocchi(long n) {
    if (n < 0) throw std::invalid_argument("genocchi: negative index");
    return BigRational(2) * (BigRational(1) - pow2q(n)) * bernoulli(n);
}

}  // namespace eulersum
