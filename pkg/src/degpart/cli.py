"""Command-line client for the degpart service.

Every command is a thin HTTP client: it builds a request, posts it to the
service, and renders the response. Without --server the service app is
mounted in-process (no socket), so the CLI works standalone; with
--server URL the same requests go to a running instance.

Exit codes: 0 found/verified, 1 none-exists, 2 unknown, 3 input error,
4 theorem violation detected.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3
EXIT_VIOLATION = 4


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)

    from .service.app import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://degpart.local", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _call(server: str | None, path: str, payload: dict) -> dict:
    """Post and return the response dict; input-level failures exit 3."""
    try:
        response = _request(server, path, payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(EXIT_INPUT)
    return response.json()


def _read_instance(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _instance_payload(file: str, demands: tuple | None) -> dict:
    payload: dict = {"instance": _read_instance(file)}
    if demands is not None:
        payload["default_a"], payload["default_b"] = demands
    return payload


def exit_code_for_solve(resp: dict) -> int:
    hyp = resp.get("hypotheses", {})
    if resp["status"] == "none":
        if hyp.get("main_i") or hyp.get("main_ii"):
            return EXIT_VIOLATION
        return EXIT_NONE
    if resp["status"] == "unknown":
        return EXIT_UNKNOWN
    return EXIT_FOUND


def exit_code_for_campaign(report: dict) -> int:
    return EXIT_VIOLATION if report.get("violations") else EXIT_FOUND


@click.group()
@click.option(
    "--server",
    envvar="DEGPART_SERVER",
    default=None,
    help="URL of a running degpart service; default runs the app in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Degree-constrained vertex bipartition toolkit."""
    ctx.obj = server


demands_option = click.option(
    "--demands",
    nargs=2,
    type=int,
    default=None,
    help="Default (a, b) for vertices without d lines.",
)
json_option = click.option("--json", "as_json", is_flag=True, help="JSON output.")
b3_variant_option = click.option(
    "--b3-variant", type=click.Choice(["strict", "loose"]), default="strict"
)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--pattern", type=click.Choice(["b3", "k23", "s1"]), default="b3")
@b3_variant_option
@json_option
@click.pass_obj
def classify(server, file, pattern, b3_variant, as_json):
    """Vertices covered by the chosen pattern."""
    payload = _instance_payload(file, None)
    payload.update(pattern=pattern, b3_variant=b3_variant)
    resp = _call(server, "/classify", payload)
    if as_json:
        click.echo(json.dumps(resp, sort_keys=True))
    else:
        click.echo(f"pattern: {resp['pattern']}")
        click.echo("vertices: " + " ".join(resp["labels"]))


@main.command()
@click.argument("file", type=click.Path())
@demands_option
@b3_variant_option
@json_option
@click.pass_obj
def check(server, file, demands, b3_variant, as_json):
    """Hypothesis report for an instance."""
    payload = _instance_payload(file, demands)
    payload.update(b3_variant=b3_variant)
    resp = _call(server, "/check", payload)
    if as_json:
        click.echo(json.dumps(resp, sort_keys=True))
        return
    click.echo(f"n: {resp['n']} (n >= 5: {str(resp['n_at_least_5']).lower()})")
    for key in ("A", "B", "C", "D", "main_i", "main_ii"):
        entry = resp[key]
        line = f"{key}: {'holds' if entry['holds'] else 'fails'}"
        if entry["reason"]:
            line += f" ({entry['reason']})"
        if entry["failing"]:
            line += " at " + " ".join(map(str, entry["failing"]))
        click.echo(line)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--pattern", type=click.Choice(["b3", "k23"]), default="b3")
@click.option("--seed", type=int, default=0)
@click.option("--budget", type=int, default=None)
@click.option("--restarts", type=int, default=8)
@click.option("--oracle-limit", type=int, default=24)
@click.option("--allow-neutral-swaps", type=int, default=0)
@b3_variant_option
@demands_option
@json_option
@click.pass_obj
def solve(
    server,
    file,
    pattern,
    seed,
    budget,
    restarts,
    oracle_limit,
    allow_neutral_swaps,
    b3_variant,
    demands,
    as_json,
):
    """Search for a feasible partition."""
    payload = _instance_payload(file, demands)
    payload.update(
        pattern=pattern,
        seed=seed,
        budget=budget,
        restarts=restarts,
        oracle_limit=oracle_limit,
        allow_neutral_swaps=allow_neutral_swaps,
        b3_variant=b3_variant,
    )
    resp = _call(server, "/solve", payload)
    if as_json:
        click.echo(json.dumps(resp, sort_keys=True))
    else:
        from .instances import render_outcome_text

        click.echo(render_outcome_text(resp), nl=False)
    code = exit_code_for_solve(resp)
    if code == EXIT_VIOLATION:
        click.echo(
            "COUNTEREXAMPLE: a holding hypothesis has no feasible partition",
            err=True,
        )
    sys.exit(code)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--oracle-limit", type=int, default=24)
@demands_option
@json_option
@click.pass_obj
def oracle(server, file, oracle_limit, demands, as_json):
    """Exhaustive existence check (small n only)."""
    payload = _instance_payload(file, demands)
    payload.update(oracle_limit=oracle_limit)
    resp = _call(server, "/oracle", payload)
    if as_json:
        click.echo(json.dumps(resp, sort_keys=True))
    elif resp["status"] == "found":
        click.echo("found")
        click.echo("x1: " + " ".join(map(str, resp["x1"])))
        click.echo("x2: " + " ".join(map(str, resp["x2"])))
    else:
        click.echo("none exists")
    sys.exit(EXIT_FOUND if resp["status"] == "found" else EXIT_NONE)


def _campaign_options(fn):
    for option in reversed(
        [
            click.option("--n-min", type=int, default=5),
            click.option("--n-max", type=int, default=10),
            click.option("--p", type=float, default=0.5),
            click.option("--count", type=int, default=100),
            click.option(
                "--variant",
                type=click.Choice(["main_i", "main_ii", "thmA"]),
                default="main_i",
            ),
            click.option("--seed", type=int, default=0),
            click.option(
                "--pattern", type=click.Choice(["b3", "k23"]), default=None
            ),
            click.option("--oracle-limit", type=int, default=24),
            click.option("--slack", is_flag=True, help="Plant with slack, not tight."),
            click.option("--restarts", type=int, default=2),
            b3_variant_option,
            click.option(
                "--dump-dir",
                type=click.Path(file_okay=False),
                default=None,
                help="Write violation/witness instances here for replay.",
            ),
        ]
    ):
        fn = option(fn)
    return fn


def _campaign_payload(kwargs: dict) -> dict:
    payload = {
        "n_min": kwargs["n_min"],
        "n_max": kwargs["n_max"],
        "p": kwargs["p"],
        "count": kwargs["count"],
        "variant": kwargs["variant"],
        "seed": kwargs["seed"],
        "oracle_limit": kwargs["oracle_limit"],
        "tight": not kwargs["slack"],
        "restarts": kwargs["restarts"],
        "b3_variant": kwargs["b3_variant"],
    }
    if kwargs["pattern"]:
        payload["pattern"] = kwargs["pattern"]
    return payload


def _finish_campaign(report: dict, dump_dir: str | None) -> None:
    if dump_dir:
        target = Path(dump_dir)
        target.mkdir(parents=True, exist_ok=True)
        for tag in ("violations", "witnesses"):
            for record in report.get(tag, []):
                name = f"{tag[:-1]}_{record['index']:05d}.degpart"
                (target / name).write_text(record["instance"])
    from .campaign import report_json

    click.echo(report_json(report), nl=False)
    sys.exit(exit_code_for_campaign(report))


@main.command()
@_campaign_options
@click.pass_obj
def verify(server, dump_dir, **kwargs):
    """Verification campaign over planted random instances."""
    report = _call(server, "/verify", _campaign_payload(kwargs))["report"]
    _finish_campaign(report, dump_dir)


@main.command()
@_campaign_options
@click.option(
    "--weaken",
    type=click.Choice(["drop_h", "relax_min"]),
    default="drop_h",
    help="Hypothesis weakening used to mine tightness witnesses.",
)
@click.pass_obj
def mine(server, dump_dir, weaken, **kwargs):
    """Mine tightness witnesses under a weakened hypothesis."""
    payload = _campaign_payload(kwargs)
    payload["weaken"] = weaken
    report = _call(server, "/mine", payload)["report"]
    _finish_campaign(report, dump_dir)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("degpart.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
