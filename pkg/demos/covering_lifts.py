"""Follow one marked edge from quotient graph to covering-lift census."""

from torsym import (
    covolume,
    cycle_image_lattice,
    edge_orbit_graph,
    instantiate,
    join,
    labeled_marked_edges,
    lift_connected,
    lift_genus,
    make_group,
    suppress_valence_two,
)

# ============================================================
# the deep body-centered case
# ============================================================


def fmt_point(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def show_quotient_graph() -> None:
    G = make_group("I4_132")
    edge = labeled_marked_edges("I4_132")["beta"]
    print("I4_132, edge beta: the deepest cycle-image lattice")
    print("=" * 60)
    a, b = edge.segment
    print(f"representative segment: {fmt_point(a)} -> {fmt_point(b)}")
    print(f"rotation index {edge.edge_index}, link {{{','.join(map(str, edge.link))}}}")

    raw = edge_orbit_graph(G, edge, suppress=False)
    print(f"raw quotient graph: {len(raw.vertices)} vertices, {len(raw.edges)} edges")
    smooth = suppress_valence_two(raw)
    print(
        f"after smoothing valence-2 vertices: {len(smooth.vertices)} vertices, "
        f"{len(smooth.edges)} edges (the complete graph on 4 vertices)"
    )
    print(f"cycle rank: {len(smooth.edges) - len(smooth.vertices) + 1}")

    image = cycle_image_lattice(smooth)
    print(f"cycle-image lattice covolume: {covolume(image)} (body-centered, n = 6)")
    print()
    return G, smooth, image


def show_connectivity_filter(G, graph, image) -> None:
    print("Lift-connectivity filter over the body-centered family")
    print("=" * 60)
    print("a lattice T passes iff join(cycle image, T) recovers the full T0\n")
    for n in range(1, 10):
        T = instantiate("CUBIC_BODY", 2 * n)
        joined = join(image, T)
        verdict = "connected" if lift_connected(graph, T) else "drops out"
        print(
            f"n={n}: join covolume {str(covolume(joined)):>4s} "
            f"-> {verdict}" + ("   (3 divides n)" if n % 3 == 0 else "")
        )
    print()


def show_genus_growth(G, graph) -> None:
    print("Genus of the lifted surface along the accepted lattices")
    print("=" * 60)
    for n in (1, 2, 4, 5):
        T = instantiate("CUBIC_BODY", 2 * n)
        g = lift_genus(graph, T)
        print(f"n={n}: genus {g:4d}, symmetry order {12 * (g - 1):5d} = 2n^3 * 12")


if __name__ == "__main__":
    G, graph, image = show_quotient_graph()
    show_connectivity_filter(G, graph, image)
    show_genus_growth(G, graph)
