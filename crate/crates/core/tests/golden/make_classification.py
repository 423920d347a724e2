"""Regenerates classification.txt from a hand transcription of the
symmetry-class rules, independently of the Rust implementation.

    python3 make_classification.py > classification.txt
"""

ORDER = ["Hplus", "Hminus", "Hprime"]


def fmt(subspaces, forbidden):
    labels = ", ".join(s for s in ORDER if s in subspaces)
    return f"{labels}; forbidden by: {forbidden}"


def spin0(j, k):
    if k == 0:
        return ({"Hplus"}, "none") if j % 2 == 0 else ({"Hminus"}, "SS")
    if k % 3 == 0:
        return ({"Hplus", "Hminus"}, "none")
    return ({"Hprime"}, "SP")


def spin_half(j, k, i):
    if k == 0:
        if j % 2 == 0:
            return ({"Hprime"}, "SP") if i == "1/2" else ({"Hplus"}, "SS")
        return ({"Hprime"}, "SP") if i == "1/2" else ({"Hminus"}, "none")
    if k % 3 == 0:
        return ({"Hprime"}, "SP") if i == "1/2" else ({"Hplus", "Hminus"}, "none")
    return ({"Hplus", "Hminus", "Hprime"}, "none") if i == "1/2" else ({"Hprime"}, "SP")


def combine(parts):
    subspaces = set().union(*(p[0] for p in parts))
    verdicts = [p[1] for p in parts]
    if "none" in verdicts:
        return subspaces, "none"
    sp = any("SP" in v for v in verdicts)
    ss = any("SS" in v for v in verdicts)
    return subspaces, {(True, False): "SP", (False, True): "SS", (True, True): "SP, SS"}[(sp, ss)]


def spin_half_all(j, k):
    return combine([spin_half(j, k, "1/2"), spin_half(j, k, "3/2")])


def c3v_equivalent_j(j, species):
    # the antisymmetric inversion species flips the K = 0 exchange parity
    return j if species == "s" else j + 1


def main():
    out = []
    for j in range(11):
        for k in range(-j, j + 1):
            out.append(f"spin0_planar J={j} K={k} -> {fmt(*spin0(j, abs(k)))}")
    for j in range(11):
        for k in range(-j, j + 1):
            out.append(f"spin_half_planar J={j} K={k} I=- -> {fmt(*spin_half_all(j, abs(k)))}")
            for i in ("1/2", "3/2"):
                out.append(f"spin_half_planar J={j} K={k} I={i} -> {fmt(*spin_half(j, abs(k), i))}")
    for j in range(11):
        for sp in ("s", "a"):
            jj = c3v_equivalent_j(j, sp)
            out.append(f"c3v_k0 spin=0 J={j} species={sp} -> {fmt(*spin0(jj, 0))}")
            out.append(f"c3v_k0 spin=1/2 J={j} species={sp} I=- -> {fmt(*spin_half_all(jj, 0))}")
            for i in ("1/2", "3/2"):
                out.append(f"c3v_k0 spin=1/2 J={j} species={sp} I={i} -> {fmt(*spin_half(jj, 0, i))}")
    print("\n".join(out))


if __name__ == "__main__":
    main()
