"""Command-line front door.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Reports are
deterministic: timings are included only with --timings, and all
randomness derives from --seed.  Environment overrides: E6INV_BACKEND
(pure|compiled), E6INV_GROUP_CAP, E6INV_ORACLE_CAP.
"""

from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor

import click

from e6inv import backend, dimoracle, modstruct, rootsystem, sigma, verify
from e6inv.invariants import GENERATORS_13, registry
from e6inv.poly import StructuralError
from e6inv.report import Report, merge
from e6inv.tables import Errata

SUITE_ORDER = [
    "action-tables", "definitions", "invariance", "sigma",
    "minpoly", "relations", "presentations", "normalform",
]


class Ctx:
    def __init__(self, fmt, errata_path, prime, seed, jobs, timings):
        self.fmt = fmt
        self.errata_path = errata_path
        self.prime = prime
        self.seed = seed
        self.jobs = jobs
        self.timings = timings

    def errata(self) -> Errata:
        return Errata.load(self.errata_path)

    def registry(self):
        if self.prime != 3:
            raise click.UsageError(
                "the verification tables are mod-3 identities; rerun with --prime 3"
            )
        return registry(self.prime)

    def emit(self, report: Report) -> int:
        if self.fmt == "json":
            click.echo(report.to_json(timings=self.timings))
        else:
            click.echo(report.to_text(timings=self.timings))
        return 0 if report.ok() else 1


@click.group()
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              help="Report format.")
@click.option("--errata", "errata_path", type=click.Path(exists=True), default=None,
              help="Errata file overriding the shipped corrections.")
@click.option("--prime", type=int, default=3, show_default=True,
              help="Coefficient field characteristic.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized property checks.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker threads across independent suites.")
@click.option("--timings", is_flag=True, help="Include elapsed times in reports.")
@click.pass_context
def main(ctx, fmt, errata_path, prime, seed, jobs, timings):
    """Exact verification of the mod-3 Weyl-group invariants of E6."""
    ctx.obj = Ctx(fmt, errata_path, prime, seed, jobs, timings)


def _run_suites(ctx: Ctx, names: list[str], mode: str) -> Report:
    reg = ctx.registry()
    errata = ctx.errata()

    def run(name):
        checks = verify.SUITES[name](reg, errata, mode=mode, seed=ctx.seed)
        return Report(name, checks, prime=ctx.prime)

    if ctx.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=ctx.jobs) as pool:
            reports = list(pool.map(run, names))
    else:
        reports = [run(n) for n in names]
    if len(reports) == 1:
        return reports[0]
    return merge("all", reports)


@main.group("verify")
def verify_group():
    """Run verification suites."""


def _verify_cmd(name):
    @click.pass_obj
    def cmd(obj, **kw):
        mode = kw.get("mode", "base")
        names = SUITE_ORDER if name == "all" else [name]
        sys.exit(obj.emit(_run_suites(obj, names, mode)))

    return cmd


for _name in ["all"] + SUITE_ORDER:
    _cmd = _verify_cmd(_name)
    if _name in ("all", "relations"):
        _cmd = click.option(
            "--mode", type=click.Choice(["base", "h"]), default="base",
            show_default=True,
            help="Relation oracle: full base-ring expansion or the H-form route.",
        )(_cmd)
    verify_group.command(_name)(_cmd)


@main.group()
def compute():
    """Compute objects (sigma entries, the Poincare series)."""


@compute.command("sigma")
@click.option("--j", type=int, required=True, help="Index 1..27.")
@click.pass_obj
def compute_sigma(obj, j):
    """Print sigma_j of the weight set, in generator coordinates."""
    reg = obj.registry()
    expected = sigma.sigma_expected(reg)
    if j not in expected:
        raise click.UsageError("--j must be in 1..27")
    comp = sigma.sigma_component(j, obj.prime)
    want = expected[j].substitute(reg.generator_evaluation_map())
    residual = comp - want
    if obj.fmt == "json":
        import json

        click.echo(json.dumps({
            "j": j,
            "expression": expected[j].to_text(),
            "residual": residual.to_text() if not residual.is_zero() else "0",
            "terms_in_base_ring": len(comp),
        }, indent=2))
    else:
        click.echo(f"sigma_{j} = {expected[j].to_text()}")
        click.echo(f"residual against the product expansion: "
                   f"{'0' if residual.is_zero() else residual.to_text()[:200]}")
    sys.exit(0 if residual.is_zero() else 1)


@compute.command("poincare")
@click.option("--max-degree", type=int, default=80, show_default=True)
@click.option("--closed-form", type=click.Choice(["primary", "variant"]),
              default="primary", show_default=True)
@click.pass_obj
def compute_poincare(obj, max_degree, closed_form):
    """Coefficients of the invariant ring's Poincare series."""
    coeffs = modstruct.poincare_series(max_degree, closed_form)
    if obj.fmt == "json":
        import json

        click.echo(json.dumps({
            "max_degree": max_degree,
            "closed_form": closed_form,
            "coefficients": coeffs,
        }))
    else:
        for d in range(0, max_degree + 1, 2):
            if coeffs[d]:
                click.echo(f"degree {d:>3}: {coeffs[d]}")


@compute.command("product-stats")
@click.pass_obj
def compute_product_stats(obj):
    """Term counts of the 27-weight product P (informational; ~30s)."""
    import json

    obj.registry()
    P = sigma.expand_P(obj.prime)
    c_terms = sigma.count_P_in_c_coordinates(obj.prime)
    doc = {
        "degree": P.degree(),
        "terms_in_t_basis": len(P),
        "terms_in_c_basis": c_terms,
    }
    if obj.fmt == "json":
        click.echo(json.dumps(doc))
    else:
        click.echo(f"P has degree {doc['degree']}, {doc['terms_in_t_basis']} terms "
                   f"over (t, t1..t5), {doc['terms_in_c_basis']} terms over (t, c1..c5)")


@main.group()
def oracle():
    """Linear-algebra dimension oracle."""


@oracle.command("dim")
@click.option("--degree", type=int, required=True, help="Cohomological degree.")
@click.pass_obj
def oracle_dim(obj, degree):
    if degree % 2:
        dim = 0
    else:
        dim = dimoracle.invariant_dimension(degree // 2, obj.prime)
    if obj.fmt == "json":
        import json

        click.echo(json.dumps({"degree": degree, "dimension": dim, "prime": obj.prime}))
    else:
        click.echo(f"dim H^{degree} = {dim} (mod {obj.prime})")


@oracle.command("sweep")
@click.option("--max-degree", type=int, default=40, show_default=True,
              help="Cohomological bound.")
@click.option("--compare-poincare", is_flag=True,
              help="Compare against the closed-form series (requires prime 3).")
@click.pass_obj
def oracle_sweep(obj, max_degree, compare_poincare):
    rows = []
    failed = False
    series = modstruct.poincare_series(max_degree, "primary") if compare_poincare else None
    for d in range(0, max_degree + 1, 2):
        dim = dimoracle.invariant_dimension(d // 2, obj.prime)
        row = {"degree": d, "dimension": dim}
        if series is not None:
            row["ps_coefficient"] = series[d]
            row["match"] = dim == series[d]
            failed = failed or not row["match"]
        rows.append(row)
    if obj.fmt == "json":
        import json

        click.echo(json.dumps(rows, indent=1))
    else:
        for r in rows:
            line = f"degree {r['degree']:>3}: dim {r['dimension']:>3}"
            if series is not None:
                line += f"  series {r['ps_coefficient']:>3}  {'ok' if r['match'] else 'MISMATCH'}"
            click.echo(line)
    sys.exit(1 if failed else 0)


@main.group("group")
def group_group():
    """Weyl group data."""


@group_group.command("order")
@click.option("--generators", default="1,2,3,4,5,6", show_default=True,
              help="Comma-separated reflection indices.")
@click.pass_obj
def group_order(obj, generators):
    import json
    import time

    gens = tuple(int(s) for s in generators.split(",") if s.strip())
    t0 = time.monotonic()
    order, _ = rootsystem.enumerate_group(gens)
    elapsed = (time.monotonic() - t0) * 1000
    if obj.fmt == "json":
        doc = {"order": order, "generator_set": sorted(gens)}
        if obj.timings:
            doc["elapsed_ms"] = round(elapsed, 1)
        click.echo(json.dumps(doc))
    else:
        click.echo(f"order of <R_{', R_'.join(str(g) for g in sorted(gens))}> = {order}")


@group_group.command("set-s")
@click.option("--check", is_flag=True, help="Verify closure, distinctness, orbit.")
@click.pass_obj
def group_set_s(obj, check):
    import json

    try:
        S = rootsystem.build_set_S()
        reduced = rootsystem.set_S_mod_p(obj.prime if obj.prime != 1 else 3)
        doc = {"size": len(S), "closed": True, "distinct_mod_p": len(set(reduced)) == 27}
    except rootsystem.SetSError as ex:
        click.echo(f"set S verification failed: {ex}", err=True)
        sys.exit(1)
    if obj.fmt == "json":
        click.echo(json.dumps(doc))
    else:
        click.echo(f"|S| = {doc['size']}, closed under all generators, "
                   f"distinct mod {obj.prime}: {doc['distinct_mod_p']}")


@main.group("element")
def element_group():
    """Named elements of the computation."""


@element_group.command("show")
@click.option("--name", required=True, help="Element name (x4 ... y76, h12, g24, ...).")
@click.option("--basis", type=click.Choice(["t", "generators"]), default="t",
              show_default=True)
@click.option("--max-terms", type=int, default=0,
              help="Truncate display after this many terms (0 = all).")
@click.pass_obj
def element_show(obj, name, basis, max_terms):
    """Print a named element in t-coordinates or H-coordinates."""
    reg = obj.registry()
    if name not in reg:
        raise click.UsageError(f"unknown element {name!r}")
    if basis == "t":
        poly = reg[name]
    else:
        try:
            poly = reg.h_form(name)
        except StructuralError as ex:
            raise click.UsageError(str(ex))
    text = poly.to_text()
    if max_terms and len(poly) > max_terms:
        text = " + ".join(text.split(" + ")[:max_terms]) + f" + ... ({len(poly)} terms)"
    click.echo(text)


@main.command("nf")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True,
              help="File with one polynomial in H coordinates (t, x4, x8, y10, h12, h16).")
@click.option("--strict", is_flag=True,
              help="Fail if the reduction needs x4 inverses.")
@click.pass_obj
def nf_cmd(obj, input_path, strict):
    """Normal form over the basis t^i h12^j, coefficients in M~."""
    from e6inv.invariants import h_ring

    obj.registry()  # enforces prime 3
    text = open(input_path).read()
    f = h_ring().parse(text)
    try:
        nf = modstruct.normal_form(f, allow_x4_inverse=not strict)
    except StructuralError as ex:
        click.echo(f"error: {ex}", err=True)
        sys.exit(1)
    if obj.fmt == "json":
        import json

        click.echo(json.dumps({
            f"t^{i}*h12^{j}": c.to_text() for (i, j), c in sorted(nf.slots.items())
        }, indent=2))
    else:
        for (i, j), c in sorted(nf.slots.items()):
            click.echo(f"t^{i} h12^{j}: {c.to_text()}")
        if not nf.slots:
            click.echo("0")


@main.command("backend-info")
def backend_info():
    """Show which kernel backend is active."""
    click.echo(backend.backend_name())


if __name__ == "__main__":
    main()
