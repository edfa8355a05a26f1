#include "qcolor/nt.hpp"

namespace qcolor {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d : {uint64_t{2}, uint64_t{3}}) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    for (uint64_t d = 5; d * d <= n; d += 6) {
        for (uint64_t e : {d, d + 2}) {
            while (n % e == 0) {
                out.push_back(e);
                n /= e;
            }
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p : prime_factors(n)) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    return out;
}

} // namespace qcolor
