"""Tabulate both action variants, with and without t -> -t, on the d = k instances."""
import argparse

from spanline.schubert import VARIANTS, localization_profile, verify_representatives


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", default="2,2;3,2;3,3;4,2")
    ap.add_argument("--seed", type=int, default=17)
    args = ap.parse_args()
    print(f"{'(n,k)':<7} {'variant':<10} {'flip_t':<7} {'basis':<6} {'det':<8} {'diagonal':<9} acyclic")
    for spec in args.instances.split(";"):
        n, k = map(int, spec.split(","))
        for variant in VARIANTS:
            for flip in (False, True):
                rep = verify_representatives(n, k, variant, args.seed, flip)
                prof = localization_profile(n, k, variant, flip)
                print(f"({n},{k})  {variant:<10} {str(flip):<7} {str(rep.ok):<6} "
                      f"{rep.details['determinant_values'][0]:<8} {str(prof['diagonal_nonzero']):<9} {prof['acyclic']}")


if __name__ == "__main__":
    main()
