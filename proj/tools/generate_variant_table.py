#!/usr/bin/env python3
"""Regenerate data/variants.json.

Move II and III patterns are derived by enumerating local planar pictures:

* II: two strands, one passing over the other twice, forming a bigon.  The
  over strand carries two adjacent tails, the under strand two adjacent
  heads; the two crossings always have opposite signs.  Four linear entries
  cover both group orders and both relative strand directions.

* III: three pairwise-crossing strands in a disk.  A triangle can be slid
  (Reidemeister III) exactly when the over/under relation on the three
  crossings is acyclic, i.e. one strand is over both others and one is
  under both.  Enumerating all strand directions (2^3) and level orders
  (3!) yields every realizable oriented/signed pattern; the swap partner
  (all arc orders reversed) is always in the family, so the table is
  closed under application of the move.
"""

import itertools
import json
import os

# ---------------------------------------------------------------------------
# Move II entries (hand-derived, see module docstring).

R2_VARIANTS = [
    {
        "id": "IIa",
        "note": "tails group first, heads in same chord order (interleaved)",
        "groups": [
            [{"chord": "a", "role": "T", "dir": "out"},
             {"chord": "b", "role": "T", "dir": "out"}],
            [{"chord": "a", "role": "H", "dir": "in"},
             {"chord": "b", "role": "H", "dir": "in"}],
        ],
        "signs": "opposite",
    },
    {
        "id": "IIb",
        "note": "tails group first, heads reversed (nested)",
        "groups": [
            [{"chord": "a", "role": "T", "dir": "out"},
             {"chord": "b", "role": "T", "dir": "out"}],
            [{"chord": "b", "role": "H", "dir": "in"},
             {"chord": "a", "role": "H", "dir": "in"}],
        ],
        "signs": "opposite",
    },
    {
        "id": "IIc",
        "note": "heads group first, tails in same chord order (interleaved)",
        "groups": [
            [{"chord": "a", "role": "H", "dir": "in"},
             {"chord": "b", "role": "H", "dir": "in"}],
            [{"chord": "a", "role": "T", "dir": "out"},
             {"chord": "b", "role": "T", "dir": "out"}],
        ],
        "signs": "opposite",
    },
    {
        "id": "IId",
        "note": "heads group first, tails reversed (nested)",
        "groups": [
            [{"chord": "a", "role": "H", "dir": "in"},
             {"chord": "b", "role": "H", "dir": "in"}],
            [{"chord": "b", "role": "T", "dir": "out"},
             {"chord": "a", "role": "T", "dir": "out"}],
        ],
        "signs": "opposite",
    },
]

# ---------------------------------------------------------------------------
# Move III enumeration.

# Model strands as three lines in the plane:
#   strand 0: y = 0          direction +-(1, 0)
#   strand 1: x = 0          direction +-(0, 1)
#   strand 2: x + y = 1      direction +-(1, -1)
# Crossings, keyed by the pair of strands involved:
#   c01 = (0,0), c02 = (1,0), c12 = (0,1)

CROSSINGS = {frozenset({0, 1}): (0.0, 0.0),
             frozenset({0, 2}): (1.0, 0.0),
             frozenset({1, 2}): (0.0, 1.0)}

BASE_DIR = {0: (1.0, 0.0), 1: (0.0, 1.0), 2: (1.0, -1.0)}


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def strand_order(strand, direction):
    """Crossings met along the strand, in traversal order."""
    def key(item):
        pt = item[1]
        return pt[0] * direction[0] + pt[1] * direction[1]
    met = [(pair, pt) for pair, pt in CROSSINGS.items() if strand in pair]
    met.sort(key=key)
    return [pair for pair, _ in met]


def enumerate_r3():
    raw = []
    for dirs in itertools.product((1, -1), repeat=3):
        dvec = {s: (BASE_DIR[s][0] * dirs[s], BASE_DIR[s][1] * dirs[s])
                for s in range(3)}
        for levels in itertools.permutations(range(3)):
            # levels[s] = height of strand s, larger is over
            arcs = []
            for s in range(3):
                entries = []
                for pair in strand_order(s, dvec[s]):
                    other = next(iter(pair - {s}))
                    role = "T" if levels[s] > levels[other] else "H"
                    entries.append((pair, role))
                arcs.append(entries)
            signs = {}
            for pair in CROSSINGS:
                a, b = sorted(pair, key=lambda s: -levels[s])  # a over b
                signs[pair] = "+" if cross(dvec[a], dvec[b]) > 0 else "-"
            raw.append((arcs, signs))
    return raw


def canonical(arcs, signs):
    """Minimal representation over chord-tag assignments and arc order."""
    pairs = list(CROSSINGS.keys())
    best = None
    for perm in itertools.permutations("abc"):
        tag = dict(zip(pairs, perm))
        named = [tuple((tag[p], role) for p, role in arc) for arc in arcs]
        named_sorted = tuple(sorted(named))
        sgn = tuple(sorted((tag[p], s) for p, s in signs.items()))
        rep = (named_sorted, sgn)
        if best is None or rep < best:
            best = rep
    return best


def main():
    seen = {}
    for arcs, signs in enumerate_r3():
        rep = canonical(arcs, signs)
        if rep not in seen:
            seen[rep] = (arcs, signs)

    r3 = []
    for idx, rep in enumerate(sorted(seen), start=1):
        named_arcs, sgn = rep
        r3.append({
            "id": f"III{idx:02d}",
            "arcs": [[{"chord": t, "role": r, "dir": "out" if r == "T" else "in"}
                      for t, r in arc] for arc in named_arcs],
            "signs": {t: s for t, s in sgn},
        })

    # closure check: reversing every arc must land back in the family
    reps = set(seen)
    for rep in reps:
        named_arcs, sgn = rep
        flipped = (tuple(sorted(tuple(reversed(arc)) for arc in named_arcs)), sgn)
        # reduce to canonical over tag permutations
        found = False
        for perm in itertools.permutations("abc"):
            relab = dict(zip("abc", perm))
            cand_arcs = tuple(sorted(tuple((relab[t], r) for t, r in arc)
                                     for arc in flipped[0]))
            cand_sgn = tuple(sorted((relab[t], s) for t, s in sgn))
            if (cand_arcs, cand_sgn) in reps:
                found = True
                break
        if not found:
            raise SystemExit("variant family not closed under reversal")

    out = {"r2_variants": R2_VARIANTS, "r3_variants": r3}
    path = os.path.join(os.path.dirname(__file__), "..", "data", "variants.json")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(out, f, indent=2)
        f.write("\n")
    print(f"wrote {len(r3)} r3 variants to {os.path.normpath(path)}")


if __name__ == "__main__":
    main()
