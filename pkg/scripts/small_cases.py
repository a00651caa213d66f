"""Print bound vs. computed spectral radius for a handful of small hypergraphs."""

from hyperbounds.bounds import adjacency_bound, signless_bound
from hyperbounds.hypergraph import complete, degree_sequence, from_edges, single_edge
from hyperbounds.spectral import spectral_radius

CASES = {
    "P3": from_edges(3, 2, [(1, 2), (2, 3)]),
    "K_1,3": from_edges(4, 2, [(1, 2), (1, 3), (1, 4)]),
    "K4": complete(4, 2),
    "C5": from_edges(5, 2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    "edge k=3": single_edge(3, 3),
    "K4^(3)": complete(4, 3),
    "loose path k=3": from_edges(5, 3, [(1, 2, 3), (3, 4, 5)]),
    "sunflower k=3": from_edges(7, 3, [(1, 2, 3), (1, 4, 5), (1, 6, 7)]),
}


def main():
    print(f"{'case':16s} {'rho':>10s} {'min phi':>10s} {'s':>3s} {'q':>10s} {'min psi':>10s} {'s':>3s}")
    for name, h in CASES.items():
        d = degree_sequence(h)
        a = adjacency_bound(d, h.n, h.k)
        b = signless_bound(d, h.n, h.k)
        rho = spectral_radius(h).value
        q = spectral_radius(h, "signless").value
        flag = "  <- psi below q" if b.min_value < q - 1e-6 else ""
        print(f"{name:16s} {rho:10.6f} {a.min_value:10.6f} {a.argmin_s:3d} "
              f"{q:10.6f} {b.min_value:10.6f} {b.argmin_s:3d}{flag}")


if __name__ == "__main__":
    main()
