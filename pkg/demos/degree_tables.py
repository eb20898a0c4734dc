"""Degree vectors along the two alternating direction words.

Every generation step replaces one component of a polynomial pair and bumps
its degree by a shifted reflection: (k0, k1) -> (4*k1 + 1 - k0, k1) in
direction 0 and (k0, k1) -> (k0, k0 + 1 - k1) in direction 1.  Starting
from (0, 0) the two alternating words produce quadratically growing tables
with closed forms, printed and checked below.
"""

from mkdv_a22.generation import degree_vector, degree_walk


def show_walk(word):
    print(f"direction word {word}:")
    for step, k in enumerate(degree_walk(word)):
        print(f"  after {step} steps: ({k.k0}, {k.k1})")


def main():
    show_walk((0, 1, 0, 1, 0, 1))
    show_walk((1, 0, 1, 0, 1, 0))

    print("\nclosed forms:")
    for n in range(1, 6):
        even = degree_vector((0, 1) * n)
        print(
            f"  2n steps of (0,1,...), n={n}: ({even.k0}, {even.k1})"
            f"  =  (3n^2-2n, (3n^2+n)/2) = ({3*n*n - 2*n}, {(3*n*n + n)//2})"
        )
    for n in range(0, 5):
        word = ((1, 0) * (n + 1))[: 2 * n + 1]
        odd = degree_vector(word)
        print(
            f"  2n+1 steps of (1,0,...), n={n}: ({odd.k0}, {odd.k1})"
            f"  =  (3n^2+2n, (3n^2+5n+2)/2) = ({3*n*n + 2*n}, {(3*n*n + 5*n + 2)//2})"
        )


if __name__ == "__main__":
    main()
