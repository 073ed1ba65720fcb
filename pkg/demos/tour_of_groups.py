"""Tour the six group presentations and their singular graphs."""

from collections import Counter

from torsym import (
    GROUP_NAMES,
    covolume,
    make_group,
    marked_edges,
    singular_graph,
)

# ============================================================
# presentation summary
# ============================================================


def fmt_point(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def show_presentations() -> None:
    print("The six maximal-order crystallographic groups")
    print("=" * 60)
    for name in GROUP_NAMES:
        G = make_group(name)
        basis = ", ".join(fmt_point(v) for v in G.T0.vectors())
        print(f"{name:8s} frame={G.frame.name:9s} point order={G.point_order:3d}")
        print(f"         T0 basis: {basis}  (covolume {covolume(G.T0)})")
    print()


# ============================================================
# singular graphs
# ============================================================


def show_singular_graphs() -> None:
    print("Singular graphs modulo the translation lattice")
    print("=" * 60)
    for name in GROUP_NAMES:
        G = make_group(name)
        edges = singular_graph(G)
        orbits = sorted({e.orbit_id for e in edges})
        by_orbit = Counter(e.orbit_id for e in edges)
        print(f"{name:8s} {len(edges):3d} segments in {len(orbits)} orbits")
        for oid in orbits:
            rep = next(e for e in edges if e.orbit_id == oid)
            link = ",".join(str(k) for k in rep.link)
            print(
                f"         orbit {oid}: size {by_orbit[oid]:2d}, "
                f"rotation index {rep.edge_index}, link {{{link}}}"
            )
    print()


def show_marked_edges() -> None:
    print("Marked edges: neighborhood boundary is a (2,2,2,3) sphere")
    print("=" * 60)
    total = 0
    for name in GROUP_NAMES:
        G = make_group(name)
        reps = marked_edges(G)
        total += len(reps)
        a, b = reps[0].segment
        print(
            f"{name:8s} {len(reps)} marked orbit(s); "
            f"first runs {fmt_point(a)} -> {fmt_point(b)}"
        )
    print(f"total marked orbits across all groups: {total}")


if __name__ == "__main__":
    show_presentations()
    show_singular_graphs()
    show_marked_edges()
