"""Edge counts of the extremal constructions next to the closed-form bounds."""
from viskit.atlas import gen_arc_max, gen_complete_semiarc, gen_semiarc_max
from viskit.bounds import max_edges
from viskit.sightlines import center_split, visibility_graph


def main():
    print("semi-arc maxima")
    for k in range(4):
        for n in (5 * k + 5, 5 * k + 7):
            rep = gen_semiarc_max(n, k)
            split = center_split(rep, k)
            m = visibility_graph(rep, k).m
            print(f"  k={k} n={n:2d} edges={m:3d} bound={max_edges('semi_arc', n, k).value}"
                  f" center_only={len(split.center_only)}")
    print("complete semi-arc graphs")
    for k in range(4):
        rep = gen_complete_semiarc(k)
        print(f"  k={k} n={len(rep.elements):2d} edges={visibility_graph(rep, k).m}")
    print("arc maxima, k=0")
    for n in (6, 8, 10, 12):
        print(f"  n={n:2d} edges={visibility_graph(gen_arc_max(n), 0).m} (3n-3={3 * n - 3})")


if __name__ == "__main__":
    main()
