"""Walkthrough: the z_n elements of a block-point pair and their vanishing.

For a weak block-point interaction the elements z_n = (ad x_{1h})^n x_2 stop
being nonzero exactly where the mu coefficient sequence hits zero: after
degree G for a + block with ghost G, and after 2G for a - block.
"""

from gknichols import (compute_truncation, is_zero_in_nichols, mu_sequence,
                       print_scalar, z_element)
from gknichols import catalog


def main():
    for name, G in [("lstr(1,G)", 1), ("lstr(1,G)", 2),
                    ("lstr_-(1,G)", 1), ("lstr_-(1,G)", 2)]:
        spec, _ = catalog.instantiate(name, {"G": G})
        eps, a = spec.epsilon(1), spec.a(2, 1)
        bound = G if eps.is_one() else 2 * G
        mus = mu_sequence(eps, a, bound + 1)
        print(f"{name}  G={G}  eps={print_scalar(eps)}  "
              f"a={print_scalar(a)}  expected bound={bound}")
        print("  mu:", ", ".join(print_scalar(m) for m in mus))
        trunc = compute_truncation(spec, bound + 2)
        for n in range(1, bound + 2):
            e, check_ok = z_element(spec, 1, 2, n)
            zero, _ = is_zero_in_nichols(e, trunc)
            status = "= 0" if zero else "!= 0"
            print(f"  z_{n} {status} in B   (derivation check "
                  f"{'ok' if check_ok else 'FAILED'})")
        print()


if __name__ == "__main__":
    main()
