"""Enumerate the labelled path graph behind a minor and export it as DOT.

Writes golden_paths.dot next to this script; render it with
``dot -Tpng golden_paths.dot -o golden_paths.png`` if graphviz is around.
"""

import pathlib

from bminors import enumerate_vector_paths, export_dot, make_minor_spec
from bminors.pathsum import path_label

spec = make_minor_spec(r=3, n=8, k=5)
paths = enumerate_vector_paths(spec)
print(f"{len(paths)} paths from (1,2) at level {spec.m} down to level 0:")
for p in paths:
    route = " -> ".join(str(t) for t in p.tuples)
    print(f"  {route}   label = {path_label(p, spec.r)}")

dot = export_dot(paths, spec.r)
out = pathlib.Path(__file__).with_name("golden_paths.dot")
out.write_text(dot)
print()
print(f"wrote {out.name}: {dot.count('->')} edges, "
      f"{sum(1 for line in dot.splitlines() if line.endswith(';') and '->' not in line)} vertices")
