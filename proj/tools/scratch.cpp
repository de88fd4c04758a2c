// temporary scratch harness (deleted before final)
#include <iostream>
#include "rgh/corpus.hpp"
#include "rgh/verify.hpp"
#include "rgh/render.hpp"
using namespace rgh;
int main() {
    Diagram d = corpus_get("fig8");
    Results base = compute_all(d);
    splitmix64 rng(7 * 0x9e3779b97f4a7c15ull + d.n);
    for (int trial = 0; trial < 6; ++trial) {
        Diagram cur = d;
        std::string seq;
        int len = 1 + (int)rng.below(3);
        for (int s = 0; s < len; ++s) {
            int type = (int)rng.below(3);
            for (int attempt = 0; attempt < 3; ++attempt) {
                Diagram before = cur;
                bool ok = detail::apply_random_move(cur, type, rng, 13);
                if (ok) { seq += std::to_string(type); break; }
                type = (type + 1) % 3;
            }
        }
        std::cout << "trial " << trial << " seq=" << seq << " n=" << cur.n << ": ";
        try {
            LinkTrace tc = validate(cur);
            StateTable stc = enumerate_states(cur, tc);
            int kc = w_power(cur.n, tc.l_f, tc.l_p);
            BigradedDims hatc = divide_w(homology_f2(build_complex(cur, stc, Flavor::Tilde)), kc);
            bool okhat = hatc == base.hat;
            LaurentPoly al = alexander_polynomial(cur, stc);
            bool okal = al == base.alexander;
            std::cout << "hat " << (okhat ? "ok" : "MISMATCH") << " alex " << (okal ? "ok" : ("MISMATCH " + al.str()));
            std::cout << "\n";
            if (!okhat) { for (auto& [k, v] : hatc.dims) std::cout << "(" << k.first << "," << k.second << ")^" << v << " "; std::cout << "\n" << serialize_diagram(cur); }
        } catch (std::exception& e) {
            std::cout << "EXC " << e.what() << "\n" << serialize_diagram(cur);
        }
    }
    return 0;
}
