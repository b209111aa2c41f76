"""Print every quantity of the seven-chord worked example."""
from freeknot import parse_diagram
from freeknot.gauss import close, cut
from freeknot.groups import dihedral_shift, reduce
from freeknot.invariants import invariant_l, phi, psi, slice_obstruction
from freeknot.parity import classify

D7 = "long: A E B F A G B C E D F D G C"


def main():
    D = parse_diagram(D7)
    cls = classify(D)
    print(f"diagram   {D7}")
    for cc in cls:
        c = cc.chord
        print(f"  {c.label} {c.first:>2} {c.second:>2}  {cc.parity:4}  type={cc.chord_type or '-'}  sort={cc.chord_sort or '-'}  letter={cc.letter}")
    print(f"counts    {cls.counts}")
    print(f"l         {invariant_l(D)}")
    print(f"phi       {phi(D)}")
    print(f"psi       {psi(D)}")
    print(f"psi nf    {reduce(psi(D))}")
    print(f"shift     {dihedral_shift(phi(D)).shift}")
    C = close(D)
    print(f"closure   l at cuts 0..3: {[invariant_l(cut(C, p)) for p in range(4)]}")
    print(f"slice     {slice_obstruction(D)}")


if __name__ == "__main__":
    main()
