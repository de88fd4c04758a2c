#pragma once

#include <string>
#include <vector>

#include "rgh/diagram.hpp"

namespace rgh {

// Embedded corpus of named real grid diagrams.  Each entry was reconstructed
// by search over symmetric marker placements and certified against published
// invariants before being frozen; meta.certified records which values the
// certification matched.  The b-variants are swap_markers images of the
// a-variants, and the skein triple differs from its base only in the window
// recorded in meta.skein_window (column pair plus mirrored row pair).

namespace detail {

struct CorpusEntry {
    const char* name;
    const char* rgd;
};

inline const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = {
        {"unknot3",
         "n=3\nO=0 1 2\nX=2 0 1\nname=unknot3\nmeta.knot=unknot\n"
         "meta.certified=hat,minus,alexander\n"},
        {"trefoil5",
         "n=5\nO=0 1 2 3 4\nX=2 3 4 0 1\nname=trefoil5\nmeta.knot=3_1m\n"
         "meta.certified=hat,minus,alexander,classical,states=26,domains=61\n"},
        {"fig8",
         "n=7\nO=6 4 5 2 3 0 1\nX=3 5 0 6 1 2 4\nname=fig8\nmeta.knot=4_1\n"
         "meta.family=twist_first\nmeta.k=1\nmeta.twist_n=2\n"
         "meta.certified=hat,minus,alexander,classical\n"},
        {"5_1",
         "n=7\nO=6 4 5 0 1 2 3\nX=1 2 3 4 5 6 0\nname=5_1\nmeta.knot=5_1\n"
         "meta.certified=classical,sum_3_1_5_1\n"},
        {"5_2",
         "n=7\nO=1 4 5 2 3 6 0\nX=6 0 3 4 1 2 5\nname=5_2\nmeta.knot=5_2\n"
         "meta.involution=second\nmeta.family=twist_second\nmeta.twist_n=3\n"
         "meta.certified=classical,trivial-real-groups,alexander\n"},
        {"6_2",
         "n=9\nO=4 2 6 3 8 5 7 0 1\nX=0 7 4 1 6 2 3 5 8\nname=6_2\nmeta.knot=6_2\n"
         "meta.certified=classical,alexander-rank-profile\n"},
        {"8_19",
         "n=7\nO=2 3 4 5 6 0 1\nX=6 0 1 2 3 4 5\nname=8_19\nmeta.knot=8_19\n"
         "meta.certified=hat,alexander,classical\n"},
        {"8_20a",
         "n=9\nO=4 3 1 5 8 7 0 6 2\nX=7 8 6 0 2 1 4 3 5\nname=8_20a\nmeta.knot=8_20\n"
         "meta.certified=hat,alexander,classical\n"},
        {"8_20b",
         "n=9\nO=7 8 6 0 2 1 4 3 5\nX=4 3 1 5 8 7 0 6 2\nname=8_20b\nmeta.knot=8_20\n"
         "meta.variant=swap_markers(8_20a)\nmeta.certified=hat,alexander\n"},
        {"9_42a",
         "n=9\nO=4 1 5 6 8 3 0 7 2\nX=0 6 7 2 3 4 5 1 8\nname=9_42a\nmeta.knot=9_42\n"
         "meta.certified=hat,alexander,classical\n"},
        {"9_42b",
         "n=9\nO=0 6 7 2 3 4 5 1 8\nX=4 1 5 6 8 3 0 7 2\nname=9_42b\nmeta.knot=9_42\n"
         "meta.variant=swap_markers(9_42a)\nmeta.certified=hat,alexander\n"},
        {"twist_T3",
         "n=9\nO=8 6 7 4 5 2 3 0 1\nX=5 7 2 8 1 0 6 4 3\nname=twist_T3\nmeta.knot=5_2\n"
         "meta.involution=first\nmeta.family=twist_first\nmeta.k=2\nmeta.twist_n=3\n"
         "meta.certified=classical,alexander\n"},
        {"sum_3_1_4_1",
         "n=11\nO=4 8 9 6 7 5 10 0 1 2 3\nX=6 5 7 8 10 9 1 2 3 4 0\nname=sum_3_1_4_1\n"
         "meta.knot=3_1#4_1\nmeta.certified=hat,minus,alexander,classical\n"},
        {"sum_3_1_5_1",
         "n=11\nO=10 6 7 8 9 4 5 0 1 2 3\nX=7 8 9 10 1 2 3 4 5 6 0\nname=sum_3_1_5_1\n"
         "meta.knot=3_1#5_1\nmeta.certified=hat,minus,alexander,classical\n"},
        {"sum_3_1_5_2",
         "n=11\nO=10 6 7 8 9 0 3 4 1 2 5\nX=7 8 9 10 4 5 6 2 3 0 1\nname=sum_3_1_5_2\n"
         "meta.knot=3_1#5_2\nmeta.certified=hat,minus,alexander,classical\n"},
        {"skein_plus",
         "n=7\nO=6 4 5 2 3 0 1\nX=3 5 0 6 1 2 4\nname=skein_plus\nmeta.knot=4_1\n"
         "meta.skein_window=2\nmeta.skein_role=plus\n"
         "meta.certified=skein-identity,classical\n"},
        {"skein_minus",
         "n=7\nO=6 3 2 5 4 0 1\nX=4 5 6 0 1 2 3\nname=skein_minus\nmeta.knot=3_1m\n"
         "meta.skein_window=2\nmeta.skein_role=minus\n"
         "meta.certified=skein-identity,classical\n"},
        {"skein_zero",
         "n=7\nO=6 3 2 5 4 0 1\nX=3 5 0 6 1 2 4\nname=skein_zero\nmeta.knot=3-component link\n"
         "meta.skein_window=2\nmeta.skein_role=zero\n"
         "meta.certified=skein-identity\n"},
    };
    return entries;
}

}  // namespace detail

inline std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (auto& e : detail::corpus_entries()) names.push_back(e.name);
    return names;
}

inline Diagram corpus_get(const std::string& name) {
    for (auto& e : detail::corpus_entries())
        if (name == e.name) {
            Diagram d = parse_diagram(e.rgd);
            validate(d);
            return d;
        }
    throw input_error("unknown corpus diagram '" + name + "'");
}

}  // namespace rgh
