"""Write small example graph and tree files into ``data/``."""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from spdcut.generate import parallel_paths, random_spd
from spdcut.spdigraph import Digraph, format_graph, realize, tree_to_sexpr


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    g, tree = realize(parallel_paths(3))
    (args.out / "parallel_p3_x3.txt").write_text(format_graph(g))
    (args.out / "parallel_p3_x3.tree").write_text(tree_to_sexpr(tree) + "\n")

    (args.out / "single_arc.txt").write_text(format_graph(Digraph(2, ((1, 2, 1),))))
    diamond = Digraph(4, ((1, 3, 1), (1, 4, 1), (3, 2, 1), (4, 2, 1)))
    (args.out / "diamond.txt").write_text(format_graph(diamond))
    (args.out / "cyclic.txt").write_text(format_graph(Digraph(3, ((1, 2, 1), (2, 3, 1), (2, 1, 1)))))

    rng = random.Random(args.seed)
    g, tree = random_spd(7, rng, max_weight=4)
    (args.out / "random_weighted.txt").write_text(format_graph(g))
    (args.out / "random_weighted.tree").write_text(tree_to_sexpr(tree) + "\n")
    for path in sorted(args.out.iterdir()):
        print(path)


if __name__ == "__main__":
    main()
