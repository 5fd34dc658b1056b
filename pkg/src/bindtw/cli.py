"""Command-line front end: a thin client of the HTTP service.

By default requests go to an in-process instance of the service (no
network, no separate process); ``--server URL`` targets a running one
instead, e.g. started with ``bindtw serve``.

Exit codes: 0 success, 1 self-test mismatch, 2 usage or parse error,
3 resource exhaustion (materialization/table caps, transport failures).
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Optional

import click

from .selfcheck import MAX_EXHAUSTIVE_LEN

EXIT_SELFTEST_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_server_option = click.option(
    "--server",
    metavar="URL",
    default=None,
    envvar="BINDTW_SERVER",
    help="Send requests to a running service instead of computing in-process.",
)


def _request(server: Optional[str], method: str, path: str, payload: dict):
    """One request against the remote or in-process service."""
    import httpx

    async def go():
        if server:
            client = httpx.AsyncClient(base_url=server, timeout=None)
        else:
            from .service import app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=app),
                base_url="http://bindtw.internal",
                timeout=None,
            )
        async with client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()

    try:
        return asyncio.run(go())
    except Exception as exc:  # connection refused, DNS, ...
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)


def _fail_from_envelope(status: int, data: dict, files: dict[str, str]) -> None:
    error = data.get("error") if isinstance(data, dict) else None
    if isinstance(error, dict):
        kind = error.get("type")
        message = error.get("message", "request failed")
        if kind == "parse":
            where = files.get(error.get("input"), error.get("input") or "input")
            line, col = error.get("line"), error.get("column")
            click.echo(f"{where}: line {line}, column {col}: {message}", err=True)
            sys.exit(EXIT_USAGE)
        if kind == "usage":
            click.echo(f"error: {message}", err=True)
            sys.exit(EXIT_USAGE)
        if kind == "resource":
            click.echo(f"error: {message}", err=True)
            sys.exit(EXIT_RESOURCE)
    if status == 422:  # request model validation
        click.echo(f"error: invalid request: {json.dumps(data)}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(f"error: service returned status {status}: {json.dumps(data)}", err=True)
    sys.exit(EXIT_RESOURCE)


@click.group()
@click.version_option(package_name="bindtw")
def main():
    """Exact dynamic time warping for binary series."""


@main.command()
@click.argument("file_x", type=click.Path(exists=True, dir_okay=False))
@click.argument("file_y", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["bits", "rle"]), default="bits",
              show_default=True, help="Input file format.")
@click.option("--algo", type=click.Choice(["auto", "linear", "rle", "dp"]), default="auto",
              show_default=True, help="Backend selection.")
@click.option("--json", "as_json", is_flag=True, help="Print the full result record as JSON.")
@click.option("--dump-instances", is_flag=True, help="Include the reduction's instances (implies --json).")
@click.option("--delta-trace", is_flag=True, help="Include the winning instance's step increases (implies --json).")
@_server_option
def dist(file_x, file_y, fmt, algo, as_json, dump_instances, delta_trace, server):
    """Distance between the series in FILE_X and FILE_Y (one series per file)."""
    def read(path):
        try:
            return open(path, "r", encoding="ascii", newline="").read()
        except (OSError, UnicodeDecodeError) as exc:
            click.echo(f"{path}: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    payload = {
        "x": read(file_x),
        "y": read(file_y),
        "format": fmt,
        "algo": algo,
        "dump_instances": dump_instances,
        "delta_trace": delta_trace,
    }
    status, data = _request(server, "POST", "/v1/dist", payload)
    if status != 200:
        _fail_from_envelope(status, data, {"x": file_x, "y": file_y})
    if as_json or dump_instances or delta_trace:
        ordered = {key: data[key] for key in ("value", "algorithm", "n", "m", "k", "l", "elapsed_ns")}
        for extra in ("shortcut", "instances", "delta_trace"):
            if extra in data and data[extra] is not None:
                ordered[extra] = data[extra]
        click.echo(json.dumps(ordered))
    else:
        click.echo(str(data["value"]))


@main.command()
@click.option("--max-len", type=int, default=8, show_default=True,
              help=f"Exhaustive pair length bound (1..{MAX_EXHAUSTIVE_LEN}).")
@click.option("--trials", type=int, default=10_000, show_default=True,
              help="Random pairs checked after the exhaustive sweep.")
@click.option("--seed", type=int, default=1, show_default=True)
@_server_option
def selftest(max_len, trials, seed, server):
    """Cross-check the fast paths against the reference DP."""
    if not (1 <= max_len <= MAX_EXHAUSTIVE_LEN):
        raise click.UsageError(f"--max-len must be in [1, {MAX_EXHAUSTIVE_LEN}]")
    if trials < 0:
        raise click.UsageError("--trials must be >= 0")
    payload = {"max_len": max_len, "trials": trials, "seed": seed}
    status, data = _request(server, "POST", "/v1/selftest", payload)
    if status != 200:
        _fail_from_envelope(status, data, {})
    click.echo(
        f"exhaustive pairs: {data['pairs_checked']}  random trials: {data['random_trials']}  "
        f"mismatches: {data['mismatches']}"
    )
    if not data["passed"]:
        failure = data.get("first_failure") or {}
        click.echo(
            "first failure: x={x!r} y={y!r} linear={linear} rle={rle} dp={dp}".format(**failure),
            err=True,
        )
        sys.exit(EXIT_SELFTEST_FAIL)
    click.echo("all checks passed")


@main.command()
@click.option("--gen", "generator", default="uniform", show_default=True,
              help="Series generator: uniform | biased:P | few_runs:K | alternating.")
@click.option("--sizes", required=True, metavar="CSV", help="Comma-separated series lengths.")
@click.option("--trials", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--algos", default="linear", show_default=True, metavar="CSV",
              help="Comma-separated algorithms from auto,linear,rle,dp.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@_server_option
def bench(generator, sizes, trials, seed, algos, as_json, server):
    """Timed distance runs over deterministic generated inputs."""
    try:
        size_list = [int(v) for v in sizes.split(",") if v]
        if not size_list:
            raise ValueError
    except ValueError:
        raise click.UsageError("--sizes must be a comma-separated list of integers")
    algo_list = [a for a in algos.split(",") if a]
    payload = {
        "generator": generator,
        "sizes": size_list,
        "trials": trials,
        "seed": seed,
        "algos": algo_list,
    }
    status, data = _request(server, "POST", "/v1/bench", payload)
    if status != 200:
        _fail_from_envelope(status, data, {})
    if as_json:
        ordered = {
            "seed": data["seed"],
            "trials": data["trials"],
            "rows": [
                {key: row[key] for key in ("generator", "size", "algorithm", "median_ns", "checksum")}
                for row in data["rows"]
            ],
        }
        click.echo(json.dumps(ordered))
    else:
        for row in data["rows"]:
            click.echo(
                f"{row['generator']}\t{row['size']}\t{row['algorithm']}\t"
                f"{row['median_ns']}\t{row['checksum']:016x}"
            )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("bindtw.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
