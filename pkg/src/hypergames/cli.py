"""Command-line front door.

Game arguments accept either a path to an HYG file or a catalog name
(``zero``, ``c``, ``star2``, ``traffic_jam``, ...).  Exit codes are stable
per error class:

    0  success
    2  unreadable or malformed input (parse error, unknown name)
    3  structurally invalid graph
    4  mode mismatch (partizan input to an impartial command, cyclic to a
       wellfounded one)
    5  verification failure
  130  interactive play aborted on end of input
"""

from __future__ import annotations

import json
import os
import sys
from typing import Optional

import click

from . import arena, corpus, graph, grundy, minimize, order

EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_MODE = 4
EXIT_VERIFY = 5
EXIT_EOF = 130


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def load_game(ref: str) -> graph.GameGraph:
    """Resolve a game reference: existing file first, then catalog name."""
    if os.path.exists(ref):
        try:
            with open(ref, "r", encoding="utf-8") as fh:
                return corpus.parse(fh.read())
        except corpus.InvalidGraphError as e:
            _fail(EXIT_INVALID, str(e))
        except corpus.ParseError as e:
            _fail(EXIT_PARSE, str(e))
        except OSError as e:
            _fail(EXIT_PARSE, f"cannot read {ref!r}: {e}")
    try:
        return corpus.catalog(ref)
    except KeyError:
        _fail(EXIT_PARSE, f"no such file or catalog game: {ref!r}")


def _echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


@click.group()
@click.version_option()
def main() -> None:
    """Analyze, compare and play finite games and loopy hypergames."""


@main.command()
@click.argument("game")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--minimize", "do_minimize", is_flag=True, help="report the bisimulation quotient size")
def analyze(game: str, as_json: bool, do_minimize: bool) -> None:
    """Outcome profile, sector and non-losing players of a game."""
    g = load_game(game)
    profile = order.outcome_profile(g)
    cls = order.classify(profile)
    payload: dict = {
        "profile": list(profile.as_tuple()),
        "sector": cls.sector.value,
        "nonlosing": [p.value for p in cls.nonlosing],
        "winning": cls.winning.value if cls.winning else None,
    }
    if do_minimize:
        quotient, _ = minimize.bisim_minimize(g)
        payload["quotientPositions"] = len(quotient.positions)
    if as_json:
        _echo_json(payload)
        return
    click.echo(f"sector:    {cls.sector.value}")
    click.echo("profile:   " + " ".join(f"{k}={int(v)}" for k, v in zip("abcd", profile.as_tuple())))
    click.echo("nonlosing: " + (" ".join(p.value for p in cls.nonlosing) or "-"))
    click.echo(f"winning:   {cls.winning.value if cls.winning else '-'}")
    if do_minimize:
        click.echo(f"quotient:  {payload['quotientPositions']} positions")


@main.command("grundy")
@click.argument("game")
@click.option("--json", "as_json", is_flag=True)
def grundy_cmd(game: str, as_json: bool) -> None:
    """Grundy value of every reachable position of an impartial game."""
    g = load_game(game)
    try:
        marking = grundy.grundy_marking(g)
    except ValueError as e:
        _fail(EXIT_MODE, str(e))
    root_value = marking[g.root]
    outcome = grundy.outcome_of_value(root_value)
    if as_json:
        _echo_json(
            {
                "values": {p: v.text() for p, v in marking.items()},
                "root": root_value.text(),
                "outcome": outcome.value,
            }
        )
        return
    width = max(len(p) for p in marking)
    for p in sorted(marking):
        click.echo(f"{p:<{width}}  {marking[p].text()}")
    click.echo(f"root: {root_value.text()}  outcome: {outcome.value}")


def _write_graph(g: graph.GameGraph, out: Optional[str]) -> None:
    text = corpus.serialize(g)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("sum")
@click.argument("game_a")
@click.argument("game_b")
@click.option("-o", "--output", type=click.Path(), default=None)
def sum_cmd(game_a: str, game_b: str, output: Optional[str]) -> None:
    """Disjunctive sum of two games, in canonical HYG form."""
    _write_graph(graph.game_sum(load_game(game_a), load_game(game_b)), output)


@main.command("neg")
@click.argument("game")
@click.option("-o", "--output", type=click.Path(), default=None)
def neg_cmd(game: str, output: Optional[str]) -> None:
    """Negation (sides swapped), in canonical HYG form."""
    _write_graph(graph.negate(load_game(game)), output)


@main.command("minimize")
@click.argument("game")
@click.option("-o", "--output", type=click.Path(), default=None)
def minimize_cmd(game: str, output: Optional[str]) -> None:
    """Bisimulation quotient of a game, in canonical HYG form."""
    quotient, _ = minimize.bisim_minimize(load_game(game))
    _write_graph(quotient, output)


@main.command()
@click.argument("game_a")
@click.argument("game_b")
@click.option("--impartial", "mode", flag_value="impartial", help="exact, via Grundy values")
@click.option("--conway", "mode", flag_value="conway", help="exact, for wellfounded games")
@click.option("--contexts", "n_contexts", type=int, default=16, show_default=True,
              help="number of probe contexts in the default semi-decision")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def equiv(game_a: str, game_b: str, mode: Optional[str], n_contexts: int, seed: int, as_json: bool) -> None:
    """Equivalence of two games (exact modes, or context probing)."""
    g1, g2 = load_game(game_a), load_game(game_b)
    if mode == "impartial":
        try:
            result = grundy.impartial_equiv(g1, g2)
        except ValueError as e:
            _fail(EXIT_MODE, str(e))
        if as_json:
            _echo_json({"mode": mode, "equivalent": result})
        else:
            click.echo("equivalent" if result else "not equivalent")
        return
    if mode == "conway":
        try:
            result = order.conway_sim(g1, g2)
        except ValueError as e:
            _fail(EXIT_MODE, str(e))
        if as_json:
            _echo_json({"mode": mode, "equivalent": result})
        else:
            click.echo("equivalent" if result else "not equivalent")
        return
    contexts = _probe_contexts(g2, n_contexts, seed)
    witness = order.contextual_probe(g1, g2, contexts)
    if as_json:
        _echo_json(
            {
                "mode": "contexts",
                "contexts": len(contexts),
                "indistinguishable": witness is None,
                "witness": json.loads(corpus.serialize(witness)) if witness else None,
            }
        )
        return
    if witness is None:
        click.echo(f"indistinguishable over {len(contexts)} contexts")
    else:
        click.echo("distinguished by context:")
        click.echo(corpus.serialize(witness), nl=False)


def _probe_contexts(g2: graph.GameGraph, n: int, seed: int) -> list[graph.GameGraph]:
    """Deterministic probe family: the endgame, small heaps, the negation of
    the right-hand game, then seeded random games up to ``n`` total."""
    fixed = [
        corpus.catalog("zero"),
        corpus.catalog("star1"),
        corpus.catalog("star2"),
        corpus.catalog("star3"),
        graph.negate(g2),
    ]
    contexts = fixed[: max(n, 1)]
    k = 0
    while len(contexts) < n:
        contexts.append(
            corpus.generate(corpus.GeneratorParams(positions=4, density=0.4, seed=seed + k))
        )
        k += 1
    return contexts


@main.command()
@click.argument("game")
@click.option("--player", "player_name", type=click.Choice(["L", "R", "I", "II"]), required=True)
@click.option("--verify", "do_verify", is_flag=True, help="re-check the emitted strategy")
@click.option("--json", "as_json", is_flag=True)
def strategy(game: str, player_name: str, do_verify: bool, as_json: bool) -> None:
    """Positional strategy for a player: winning if possible, else non-losing."""
    g = load_game(game)
    player = order.Player(player_name)
    bundle = arena.synthesize_winning(g, player)
    claim = "winning"
    if bundle is None:
        bundle = arena.synthesize_nonlosing(g, player)
        claim = "nonlosing"
    if bundle is None:
        if as_json:
            _echo_json({"player": player.value, "exists": False})
        else:
            click.echo("none")
        return
    verified = None
    if do_verify:
        verified = arena.verify_strategy(g, bundle, player, claim)
        if not verified:
            _fail(EXIT_VERIFY, f"synthesized {claim} strategy failed verification")
    payload = {
        "player": player.value,
        "exists": True,
        "claim": claim,
        "roles": {role.value: dict(sorted(ps.choice.items())) for role, ps in bundle.roles.items()},
    }
    if verified is not None:
        payload["verified"] = verified
    if as_json:
        _echo_json(payload)
        return
    click.echo(f"claim: {claim}" + (" (verified)" if verified else ""))
    for role in sorted(bundle.roles, key=lambda r: r.value):
        moves = bundle.roles[role].choice
        body = ", ".join(f"{p}->{q}" for p, q in sorted(moves.items())) or "(no obligations)"
        click.echo(f"{role.value}: {body}")


@main.command()
@click.argument("game")
@click.option("--as", "side_name", type=click.Choice(["L", "R"]), required=True,
              help="the side you play")
@click.option("--opener", type=click.Choice(["L", "R"]), default="L", show_default=True,
              help="the side that moves first")
def play(game: str, side_name: str, opener: str) -> None:
    """Play a game against the engine at the terminal."""
    g = load_game(game)
    human = graph.Side(side_name)
    first = graph.Side(opener)
    sol = arena.solve_arena(g)
    pos = g.root
    mover = first
    seen = {(pos, mover)}
    click.echo(f"position {pos}; you play {human.value}; {first.value} opens")
    while True:
        moves = sorted(g.moves(pos, mover))
        if not moves:
            winner = mover.opponent
            click.echo(f"{mover.value} is stuck: {winner.value} wins")
            click.echo("you win" if winner is human else "you lose")
            return
        if mover is human:
            click.echo(f"your moves: {', '.join(moves)}")
            try:
                target = click.prompt("move", type=str)
            except (click.exceptions.Abort, EOFError):
                click.echo("aborted", err=True)
                sys.exit(EXIT_EOF)
            if target not in moves:
                click.echo("illegal move, try again")
                continue
        else:
            target = arena.engine_choice(g, sol, pos, mover)
            click.echo(f"engine ({mover.value}) moves to {target}")
        pos = target
        mover = mover.opponent
        state = (pos, mover)
        if state in seen:
            click.echo(f"state {state[0]} with {state[1].value} to move repeats: draw")
            return
        seen.add(state)
        click.echo(f"position {pos}")


@main.command()
@click.option("--positions", type=int, default=6, show_default=True)
@click.option("--density", type=float, default=0.3, show_default=True)
@click.option("--impartial", is_flag=True)
@click.option("--acyclic", is_flag=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def gen(positions: int, density: float, impartial: bool, acyclic: bool, seed: int,
        output: Optional[str]) -> None:
    """Write a seeded random game in canonical HYG form."""
    params = corpus.GeneratorParams(
        positions=positions, density=density, impartial=impartial, acyclic=acyclic, seed=seed
    )
    _write_graph(corpus.generate(params), output)


@main.command()
@click.option("--port", type=int, default=8000, show_default=True,
              help="0 picks a free port")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port: int, host: str) -> None:
    """Start the HTTP analysis and play service."""
    import socket

    import uvicorn

    from .service import create_app

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((host, port))
    bound = sock.getsockname()[1]
    click.echo(f"listening on {host}:{bound}", err=False)
    config = uvicorn.Config(create_app(), host=host, port=bound, log_level="warning")
    uvicorn.Server(config).run(sockets=[sock])


if __name__ == "__main__":
    main()
