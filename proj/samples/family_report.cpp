// Lists every degree sequence with n vertices and k-uniform edges together
// with the size of T_pi and the smallest first Dirichlet eigenvalue in it.
//
//   family_report [k] [n]

#include <cstdio>
#include <cstdlib>

#include "fk/fk.hpp"

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 3;
    const int n = argc > 2 ? std::atoi(argv[2]) : 11;
    std::printf("pi,members,min_lambda,winner_is_slo\n");
    for (int n0 = 1; n0 <= n; ++n0)
        for (const auto& pi : fk::feasible_degree_sequences(n, n0, k, 2)) {
            const auto cert = fk::verify_fk_theorem1(pi);
            std::printf("\"%s\",%zu,%.12f,%s\n", pi.to_string().c_str(), cert.members.size(), cert.winner_lambda(),
                        cert.slo_match ? "true" : "false");
        }
}
