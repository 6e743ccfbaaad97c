"""A guided tour: from a ring spec to an exact transfer certificate.

Run with  python3 demos/walk_tour.py
"""

from fractions import Fraction

from ringwalk import walks
from ringwalk.graphs import unitary_cayley_graph
from ringwalk.rings import make_ring, units


def main():
    ring = make_ring("Z12")
    print(f"ring: {ring.token}  (order {ring.order})")
    labels = sorted(ring.to_integer(u) for u in units(ring).elements)
    print(f"units: {labels}")

    g = unitary_cayley_graph(ring)
    print(f"\ngraph on {g.n} vertices, {g.regularity}-regular, "
          f"connected={g.is_connected()}")

    report = walks.classify_spectrum(g)
    print("\ntransition-matrix spectrum (mu = lambda / degree):")
    for line in report.lines:
        tag = f"angle order {line.angle_order}" if line.allowed else "blocked"
        print(f"  mu = {line.mu_str():>6}  x{line.multiplicity}   [{tag}]")
    print(f"classifier verdict: periodic, return time divides "
          f"{report.period_bound}")

    per = walks.period(g)
    print(f"exact period of U: {per}")
    assert walks.evolution_power(g, per).is_identity

    pst = walks.find_pst(g)
    for p in pst.pairs:
        print(f"\nperfect transfer: vertex {p.source} -> vertex {p.target} "
              f"at time {p.time} with phase {p.phase:+d}")

    # Certify the first pair by compressing U^tau onto the vertices.
    pair = pst.pairs[0]
    transfer = walks.vertex_transfer_matrix(g, pair.time)
    column = [transfer.entries[i][pair.source] for i in range(g.n)]
    expected = [Fraction(0)] * g.n
    expected[pair.target] = Fraction(pair.phase)
    assert column == expected
    print(f"certificate: column {pair.source} of N U^{pair.time} N* is "
          f"exactly {pair.phase:+d} * e_{pair.target}")


if __name__ == "__main__":
    main()
