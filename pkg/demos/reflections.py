"""Walkthrough: Dynkin diagrams of diagonal braidings and their reflections.

A rank-3 triangle with two order-3 vertices and one -1 vertex, carrying a
free parameter q on two edges, reflects at the -1 vertex into a diagram with
vertices -wq and reciprocal edge labels; reflecting twice returns the
original braiding matrix exactly.
"""

from gknichols import (DiagonalBraiding, ScalarRing, cartan_coeff, dynkin,
                       print_scalar, reflect)


def show(d, title):
    print(title)
    dd = dynkin(d)
    for i, label in enumerate(dd.labels):
        print(f"  vertex {i + 1}: {print_scalar(label)}")
    for (a, b), q in sorted(dd.edges.items()):
        print(f"  edge {a + 1}-{b + 1}: {print_scalar(q)}")


def main():
    ring = ScalarRing(3, params=("q",))
    w, q, one = ring.zeta(1), ring.param("q"), ring.one()
    d = DiagonalBraiding(
        ring, [[w, w ** 2, q], [one, w, q], [one, one, -one]])
    show(d, "original triangle:")

    r = reflect(d, 3)
    show(r, "\nreflected at vertex 3:")

    rr = reflect(r, 3)
    print("\ndouble reflection equals the original:", rr == d)

    # Cartan coefficients of a point of order N paired with qtilde = eps^2.
    print()
    for N in (4, 5, 6):
        rn = ScalarRing(N)
        eps = rn.zeta(1)
        dn = DiagonalBraiding(rn, [[eps, eps ** 2], [rn.one(), eps]])
        print(f"order {N}: c12 = {cartan_coeff(dn, 1, 2)} (= 2 - {N})")


if __name__ == "__main__":
    main()
