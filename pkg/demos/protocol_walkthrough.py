"""The entangling protocol, one operator at a time.

Traces |00> through entangle -> local moves -> disentangle for a few
strategy pairs at maximal entanglement, printing the state after each
step and the final outcome distribution with the costs it implies for
the two-traveler game.
"""

import numpy as np

from pigouq import GAMMA_MAX, entangler, ewl_outcomes, resolve, tensor_product
from pigouq.linalg import KET_00, apply, dagger

BASIS = ("|00>", "|01>", "|10>", "|11>")


def show_state(label, state):
    terms = []
    for amp, ket in zip(state, BASIS):
        if abs(amp) > 1e-12:
            terms.append(f"({amp.real:+.4f}{amp.imag:+.4f}i){ket}")
    print(f"  {label:<28} {' + '.join(terms)}")


def walkthrough(tag_a, tag_b, gamma=GAMMA_MAX):
    print(f"strategies ({tag_a}, {tag_b}) at gamma = {gamma:.4f}")
    j = entangler(gamma)
    moves = tensor_product(resolve(tag_a), resolve(tag_b))

    state = KET_00
    show_state("initial |00>", state)
    state = apply(j, state)
    show_state("after entangling", state)
    state = apply(moves, state)
    show_state("after local moves", state)
    state = apply(dagger(j), state)
    show_state("after disentangling", state)

    dist = ewl_outcomes(resolve(tag_a), resolve(tag_b), gamma)
    print(f"  outcome probabilities        {np.round(dist.as_tuple(), 6)}")
    alice = dist.p00 * 1 + dist.p01 * 1 + dist.p10 * 0.5 + dist.p11 * 1
    bob = dist.p00 * 1 + dist.p01 * 0.5 + dist.p10 * 1 + dist.p11 * 1
    print(f"  two-traveler costs           Alice {alice:.4f}, Bob {bob:.4f}")
    print()


walkthrough("P1", "P1")          # nothing happens: the frames cancel
walkthrough("P1", "Q")           # a lone phase drags both onto the lower edge
walkthrough("P2", "M")           # flip vs superposition: an even split
walkthrough("M", "M")            # the miracle pair: uniform over all outcomes
walkthrough("P2", "P2", gamma=0.0)  # unentangled double flip, purely classical
