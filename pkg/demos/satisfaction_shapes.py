"""Walk through the satisfaction-function shapes for latency requirements.

Three classic cases: no expectation point, one, and two.  Each compiles to
a piecewise-linear function over the metric range; the tables below sample
g(v) so the shape is visible in the terminal.
"""

from perfquant import ClassLabel, MetricDirection, combine, compile_single

MIN = MetricDirection.MINIMIZE


def show(title, fn, points):
    print(f"\n{title}")
    print("  segments:")
    for seg in fn.segments:
        print(f"    [{seg.v_lo:g}, {seg.v_hi:g}]  score {seg.s_lo:g} -> {seg.s_hi:g}")
    print("  samples: " + "  ".join(f"g({v:g})={fn(v):.3g}" for v in points))


# "the system should be fast" -- no expectation point, smaller is simply
# better across the whole range (here we assume a 10 s timeout cap)
fast = compile_single(ClassLabel.from_codes("S", "S"), None, (0, 10), MIN)
show('"the system should be fast"', fast, [0, 2.5, 5, 7.5, 10])

# "The system should response in 2 seconds" -- anything at or below 2 s is
# equally fine, beyond it satisfaction degrades linearly
respond2 = compile_single(ClassLabel.from_codes("E", "S"), 2, (0, 10), MIN)
show('"The system should response in 2 seconds"', respond2, [0, 2, 4, 6, 10])

# "... in 5 seconds and ideally less than 2 seconds" -- both expectations
# combine; the conflicting middle interval splits at its midpoint (3.5)
both = combine(
    [(ClassLabel.from_codes("E", "S"), 2), (ClassLabel.from_codes("E", "S"), 5)],
    (0, 10),
    MIN,
)
show('"in 5 seconds and ideally less than 2 seconds"', both, [1, 2, 3.5, 4, 7.5, 10])

print("\nJSON form of the combined function:")
print(both.to_json())
