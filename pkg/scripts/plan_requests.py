"""Analyse an applicative request program, run it on a mock fixture, dump the post log."""
import argparse
from pathlib import Path

from freeap.free import lift3
from freeap.monad import lift_a2m
from freeap.webservice import MockServer, analyze, get_a, post_a, run_free, update_emails

HERE = Path(__file__).parent


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixture", type=Path, default=HERE / "fixtures" / "blog.json")
    parser.add_argument("--post-log", type=Path, help="write the post log JSON here")
    args = parser.parse_args()

    server = MockServer.from_json(args.fixture)
    program = lift3(
        lambda a, _unit, b: a + " " + b,
        get_a("a.com/x", ["q"]),
        post_a("b.com/inbox", ["notify"], "hello"),
        get_a("a.com/z"),
    )
    report = analyze(program)
    print(f"total requests: {report.total}")
    for host, requests in report.batches:
        print(f"  {host}: " + ", ".join(f"{r.method} {r.url}" for r in requests))

    value, trace, server = run_free(lift_a2m(program), server)
    print(f"result: {value!r} after {len(trace)} requests")

    _, trace, server = run_free(update_emails("me@example.com"), server)
    print(f"update_emails made {len(trace)} requests; the count depended on the response")

    dump = server.post_log_json()
    if args.post_log:
        args.post_log.write_text(dump + "\n")
    else:
        print(dump)


if __name__ == "__main__":
    main()
