"""CLI interface for the trigraph solver."""

import asyncio
import json
import logging
from pathlib import Path
from typing import List, Optional

import click

from . import basic as basic_mod
from . import detect
from .color import ColorOutcome
from .core import PerfectSolver, check_corpus, collect_instances
from .errors import PerfectSolveError
from .formats import emit_tri, read_trigraph
from .generator import generate_many
from .models import AlphaReport, ColoringResult, CorpusReport, GeneratorSpec, TwoJoinSplit
from .oracles import alpha_bf, chi_bf, has_bsp_bf, omega_bf
from .trigraph import Trigraph

EXIT_CERTIFICATE = 2

FORMAT_OPTION = click.option(
    '--format', 'fmt', type=click.Choice(['tri', 'dimacs']), default=None,
    help='Input format (default: from the file suffix)'
)


def _one_based(vertices: List[int]) -> str:
    return "{" + ", ".join(str(v + 1) for v in sorted(vertices)) + "}"


def _load(path: str, fmt: Optional[str]) -> Trigraph:
    try:
        return read_trigraph(path, fmt)
    except (OSError, PerfectSolveError) as e:
        raise click.ClickException(f"cannot read {path}: {e}")


def _run(func, *args):
    try:
        return func(*args)
    except PerfectSolveError as e:
        raise click.ClickException(str(e))


def format_alpha(report: AlphaReport) -> str:
    """Format an alpha report for CLI output."""
    if report.solved:
        return "\n".join([
            f"✅ alpha = {report.alpha}",
            f"   stable set: {_one_based(report.stable_set)}",
        ])
    cert = report.certificate
    output = [f"⚠️  not in class: {cert.reason}"]
    if cert.path:
        output.append(f"   decomposition path: {' > '.join(cert.path)}")
    output.append(f"   leaf: {cert.leaf.n} vertices")
    return "\n".join(output)


def format_coloring(result: ColorOutcome) -> str:
    """Format a coloring (or the certificate that replaced it) for CLI output."""
    if isinstance(result, ColoringResult):
        output = [f"🎨 {result.num_colors} colors (omega = {result.omega})"]
        for i, members in enumerate(result.clique_cover):
            output.append(f"   color {i + 1}: {_one_based(members)}")
        output.append(f"   maximum clique: {_one_based(result.max_clique)}")
        return "\n".join(output)
    if result.kind == "imperfection":
        return (
            f"⚠️  not perfect: {len(result.cliques)} cliques of size {result.omega} "
            f"and no stable set meets them all"
        )
    return f"⚠️  not in class: {result.reason}"


def format_split(split: TwoJoinSplit) -> str:
    kind = "complement 2-join" if split.complemented else "2-join"
    return "\n".join([
        f"🔗 proper {split.parity.value} {kind}",
        f"   X1: A={_one_based(split.a1)} B={_one_based(split.b1)} C={_one_based(split.c1)}",
        f"   X2: A={_one_based(split.a2)} B={_one_based(split.b2)} C={_one_based(split.c2)}",
    ])


def format_corpus(report: CorpusReport) -> str:
    output = [
        f"📊 {report.total} instances: {report.mismatches} mismatches, "
        f"{report.certificates} certificates, {report.errors} errors",
        "",
    ]
    for item in report.instances:
        mark = {"ok": "🟢", "skipped": "⚪", "certificate": "🟡"}.get(item.status, "🔴")
        line = f"{mark} {item.path} (n={item.n}) {item.status}"
        if item.alpha is not None:
            line += f" alpha={item.alpha}"
        if item.error_message:
            line += f" - {item.error_message}"
        output.append(line)
    return "\n".join(output)


@click.group()
@click.option('--config', '-c', help='Path to configuration file')
@click.option('--verbose', '-v', is_flag=True, help='Log decomposition steps')
@click.pass_context
def cli(ctx, config, verbose):
    """Perfect Solve - exact stable sets and colorings for Berge trigraphs."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s"
    )
    ctx.ensure_object(dict)
    ctx.obj['config'] = config


@cli.command()
@click.argument('path')
@FORMAT_OPTION
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
@click.option('--emit-certificate', is_flag=True, help='Print the full certificate when one is produced')
@click.pass_context
def alpha(ctx, path, fmt, json_output, emit_certificate):
    """Maximum-weight strong stable set of an instance."""
    t = _load(path, fmt)
    solver = PerfectSolver(ctx.obj['config'])
    report = _run(solver.solve_alpha, t)

    if json_output:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(format_alpha(report))
        if emit_certificate and report.certificate is not None:
            click.echo(report.certificate.model_dump_json(indent=2))
    if not report.solved:
        ctx.exit(EXIT_CERTIFICATE)


@cli.command()
@click.argument('path')
@FORMAT_OPTION
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
@click.option('--emit-certificate', is_flag=True, help='Print the full certificate when one is produced')
@click.option('--robust', is_flag=True, help='Return a stable set and a clique cover of equal size')
@click.pass_context
def color(ctx, path, fmt, json_output, emit_certificate, robust):
    """Optimal coloring of a graph (no switchable pairs)."""
    g = _load(path, fmt)
    if not g.is_graph:
        raise click.ClickException("coloring needs a graph; the instance has switchable pairs")
    solver = PerfectSolver(ctx.obj['config'])

    if robust:
        result = _run(solver.robust, g)
        if json_output:
            click.echo(result.model_dump_json(indent=2))
        elif result.solved:
            click.echo(f"✅ stable set {_one_based(result.duality.stable_set)} "
                       f"and {len(result.duality.cliques)} covering cliques")
            for clique in result.duality.cliques:
                click.echo(f"   {_one_based(clique)}")
        else:
            click.echo("⚠️  no duality pair")
            if emit_certificate and result.certificate is not None:
                click.echo(result.certificate.model_dump_json(indent=2))
        if not result.solved:
            ctx.exit(EXIT_CERTIFICATE)
        return

    result = _run(solver.color_graph, g)
    if json_output:
        click.echo(result.model_dump_json(indent=2))
    else:
        click.echo(format_coloring(result))
        if emit_certificate and not isinstance(result, ColoringResult):
            click.echo(result.model_dump_json(indent=2))
    if not isinstance(result, ColoringResult):
        ctx.exit(EXIT_CERTIFICATE)


@cli.command()
@click.argument('path')
@FORMAT_OPTION
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
def basic(path, fmt, json_output):
    """List the basic classes the instance belongs to."""
    t = _load(path, fmt)
    reports = _run(basic_mod.recognize_all, t)
    if json_output:
        click.echo(json.dumps([r.model_dump(mode="json") for r in reports], indent=2))
        return
    if not reports:
        click.echo("not basic")
    for report in reports:
        click.echo(f"🧩 {report.class_name.value}")


@cli.command('find-2join')
@click.argument('path')
@FORMAT_OPTION
@click.option('--complement', is_flag=True, help='Search the complement (complement 2-joins)')
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
def find_2join(path, fmt, complement, json_output):
    """Find a proper 2-join or complement 2-join."""
    t = _load(path, fmt)
    finder = detect.find_proper_complement_2join if complement else detect.find_proper_2join
    split = _run(finder, t)
    if json_output:
        click.echo(split.model_dump_json(indent=2) if split else "null")
    elif split is None:
        click.echo("no proper 2-join found")
    else:
        click.echo(format_split(split))


@cli.command('find-end')
@click.argument('path')
@FORMAT_OPTION
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
def find_end(path, fmt, json_output):
    """Find a minimum proper fragment and print its block."""
    t = _load(path, fmt)
    found = _run(detect.find_end, t)
    if found is None:
        click.echo("null" if json_output else "no proper fragment found")
        return
    fragment, block = found
    if json_output:
        click.echo(json.dumps({
            "fragment": fragment.model_dump(mode="json"),
            "block": block.trigraph.payload().model_dump(),
            "markers": list(block.roles.vertices),
            "side_map": block.side_map,
        }, indent=2))
        return
    click.echo(f"🧱 {fragment.kind.value} end {_one_based(fragment.vertices)}")
    click.echo(emit_tri(block.trigraph, comment="block of decomposition"), nl=False)


@cli.command()
@click.option('--seed', type=int, default=0, help='Random seed of the first instance')
@click.option('--n', 'size', type=int, default=12, help='Target number of vertices')
@click.option('--max-weight', type=int, default=1, help='Weights are drawn from [0, max-weight]')
@click.option('--recipe', '-r', multiple=True,
              type=click.Choice(['bipartite', 'line', 'path', 'doubled']),
              help='Pieces to glue (repeatable)')
@click.option('--glue', type=click.Choice(['two-join', 'complement-two-join']), default='two-join')
@click.option('--parity', type=click.Choice(['odd', 'even']), default=None)
@click.option('--switchable-rate', type=float, default=0.0, help='Chance of a switchable pair per eligible edge')
@click.option('--count', type=int, default=1, help='Number of instances')
@click.option('--out', type=click.Path(file_okay=False), help='Directory for the generated files')
def gen(seed, size, max_weight, recipe, glue, parity, switchable_rate, count, out):
    """Generate composed instances."""
    spec = GeneratorSpec(
        seed=seed,
        size=size,
        recipe=list(recipe) or ["bipartite", "line"],
        glue=glue,
        parity=parity,
        max_weight=max_weight,
        switchable_rate=switchable_rate
    )
    for current, t in generate_many(spec, count):
        text = emit_tri(t, comment=f"seed {current.seed} recipe {'+'.join(current.recipe)} glue {current.glue}")
        if out:
            Path(out).mkdir(parents=True, exist_ok=True)
            target = Path(out) / f"gen_{current.seed:05d}.tri"
            target.write_text(text)
            click.echo(f"wrote {target}")
        else:
            click.echo(text, nl=False)


@cli.command()
@click.argument('path')
@FORMAT_OPTION
@click.option('--bf-cap', type=int, default=None, help='Size cap for the exhaustive oracles')
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
@click.pass_context
def oracle(ctx, path, fmt, bf_cap, json_output):
    """Exhaustive reference values for a small instance."""
    t = _load(path, fmt)
    cap = bf_cap if bf_cap is not None else PerfectSolver(ctx.obj['config']).config.bf_cap
    try:
        values = {
            "n": t.n,
            "alpha": alpha_bf(t, cap).value,
            "omega": omega_bf(t, cap).value,
            "chi": chi_bf(t, cap) if t.is_graph else None,
            "has_bsp": has_bsp_bf(t, cap),
        }
    except PerfectSolveError as e:
        raise click.ClickException(str(e))
    if json_output:
        click.echo(json.dumps(values, indent=2))
    else:
        for key, value in values.items():
            click.echo(f"  • {key}: {value}")


@cli.command()
@click.argument('root')
@FORMAT_OPTION
@click.option('--bf-cap', type=int, default=None, help='Size cap for the exhaustive oracles')
@click.option('--json-output', '--json', is_flag=True, help='Output in JSON format')
@click.pass_context
def check(ctx, root, fmt, bf_cap, json_output):
    """Solve every instance under ROOT and compare with the oracles."""
    if not collect_instances(root):
        raise click.ClickException(f"no instances under {root}")

    async def _check():
        if bf_cap is None:
            return await check_corpus(root, fmt, ctx.obj['config'])
        solver = PerfectSolver(ctx.obj['config'])
        solver.config.bf_cap = bf_cap
        return await solver.check_corpus(collect_instances(root), fmt)

    report = asyncio.run(_check())
    if json_output:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(format_corpus(report))
    if report.mismatches or report.errors:
        ctx.exit(1)


@cli.command()
@click.pass_context
def config(ctx):
    """Show current configuration."""
    try:
        solver = PerfectSolver(ctx.obj['config'])
        click.echo("📋 Current Configuration:")
        click.echo(f"  • max_vertices: {solver.config.max_vertices}")
        click.echo(f"  • berge_cap: {solver.config.berge_cap}")
        click.echo(f"  • bf_cap: {solver.config.bf_cap}")
        click.echo(f"  • max_concurrent: {solver.config.max_concurrent}")

        click.echo("\nSettings:")
        for key, value in solver.config.settings.items():
            click.echo(f"  • {key}: {value}")

    except Exception as e:
        click.echo(f"❌ Error loading configuration: {e}")


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
