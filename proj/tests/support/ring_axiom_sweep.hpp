#ifndef GWKAPPA_TESTS_RING_AXIOM_SWEEP_HPP
#define GWKAPPA_TESTS_RING_AXIOM_SWEEP_HPP

#include <gwkappa/frobenius_ring.hpp>

#include <string>
#include <vector>

namespace gwk_tests {

/* Perturb every defining constant of the ring (all rank^3 structure
   constants, all rank^2 pairing entries, every basis degree) one at a time
   and collect the perturbations the axiom check FAILS TO CATCH.  An empty
   result means validation is airtight against single-constant corruption. */
inline std::vector<std::string> undetected_ring_perturbations(const gwk::FrobeniusRing& ring)
{
    std::vector<std::string> undetected;
    const int n = ring.rank;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int m = 0; m < n; ++m) {
                gwk::FrobeniusRing r = ring;
                r.c(a, b, m) += 1;
                if (gwk::validate_ring(r).pass)
                    undetected.push_back("c[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
                                         std::to_string(m) + "]+=1");
            }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            gwk::FrobeniusRing r = ring;
            r.pairing[static_cast<std::size_t>(a) * n + b] += 1;
            if (gwk::validate_ring(r).pass)
                undetected.push_back("eta[" + std::to_string(a) + "][" + std::to_string(b) + "]+=1");
        }

    for (int a = 0; a < n; ++a)
        for (int delta : {1, 2}) {
            gwk::FrobeniusRing r = ring;
            r.degrees[a] += delta;
            if (gwk::validate_ring(r).pass)
                undetected.push_back("deg[" + std::to_string(a) + "]+=" + std::to_string(delta));
        }

    return undetected;
}

} // namespace gwk_tests

#endif
