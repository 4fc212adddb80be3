"""Compare, degree by degree, the tuples cut out by the pair conditions with the image of restriction."""
import argparse

from spanline.gkm import exploratory_gkm_dimensions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", default="2,2,1;2,2,2;3,2,1;3,2,2;3,3,2")
    ap.add_argument("--max-degree", type=int, default=2)
    args = ap.parse_args()
    print(f"{'instance':<10} {'deg':>3} {'pair-module':>11} {'image':>6}")
    for spec in args.instances.split(";"):
        n, k, d = map(int, spec.split(","))
        for deg, row in exploratory_gkm_dimensions(n, k, d, args.max_degree).items():
            mark = "" if row["divisibility_module"] == row["image"] else "  differs"
            print(f"({n},{k},{d})    {deg:>3} {row['divisibility_module']:>11} {row['image']:>6}{mark}")


if __name__ == "__main__":
    main()
