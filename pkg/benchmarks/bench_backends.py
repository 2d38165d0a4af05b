"""Compare the compiled kernel against the pure-Python fallback.

Runs representative workloads with both backends and prints timings side
by side.  Usage: python benchmarks/bench_backends.py
"""

import time

from e6inv import backend

try:
    from e6inv import _speedups  # noqa: F401
    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def workloads():
    """(name, callable) pairs; inputs are rebuilt under the active backend."""

    def product_over_weights():
        from e6inv import sigma

        sigma.expand_P.cache_clear()
        return len(sigma.expand_P(3))

    def registry_build():
        from e6inv.invariants import Registry

        return len(Registry(3).names())

    def base_ring_product():
        from e6inv.invariants import registry

        reg = registry(3)
        return len(reg["x48"] * reg["x54"])

    def reflection_sweep():
        from e6inv import weyl
        from e6inv.invariants import registry

        reg = registry(3)
        n = 0
        for i in range(1, 7):
            n += len(weyl.apply(i, reg["y76"]))
        return n

    def relation_h_mode():
        from e6inv.invariants import registry
        from e6inv.tables import Errata
        from e6inv import verify

        reg = registry(3)
        checks = verify.suite_relations(reg, Errata.load(), mode="h")
        return sum(c.status in ("pass", "patched-pass") for c in checks)

    return [
        ("27-factor weight product", product_over_weights),
        ("registry build (29 elements)", registry_build),
        ("base-ring product x48*x54", base_ring_product),
        ("all six reflections on y76", reflection_sweep),
        ("relation suite over H (24 rows)", relation_h_mode),
    ]


def run(backend_name):
    backend.set_backend(backend_name)
    from e6inv.invariants import registry

    registry.cache_clear()  # drop polynomials built under the other backend
    results = {}
    for name, fn in workloads():
        t0 = time.perf_counter()
        fn()
        results[name] = time.perf_counter() - t0
    return results


def main():
    names = ["pure"] + (["compiled"] if HAVE_COMPILED else [])
    table = {n: run(n) for n in names}
    width = max(len(w) for w, _ in workloads())
    header = f"{'workload':<{width}}  " + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for wname, _ in workloads():
        row = f"{wname:<{width}}  "
        for n in names:
            row += f"{table[n][wname]:>11.2f}s"
        if len(names) == 2 and table["compiled"][wname] > 0:
            row += f"{table['pure'][wname] / table['compiled'][wname]:>9.1f}x"
        print(row)
    if not HAVE_COMPILED:
        print("\ncompiled backend not built; showing pure fallback only")


if __name__ == "__main__":
    main()
