"""Command-line option parsers as free applicative programs.

Each option takes exactly one argument and is written ``--name value``.
Because a parser is a ``FreeA`` value its options can be listed, and its
defaults collected, without running it against any arguments.
"""
from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

from freeap.core import CONCAT, OPTIONAL, Const, identity
from freeap.free import Ap, FreeA, lift3, map_fa, one
from freeap.transform import raise_


@dataclass(frozen=True)
class OptionSpec:
    """A single option: its name, optional default, and argument reader.

    ``reader`` returns ``None`` when the argument cannot be read.
    """

    name: str
    default: Any
    reader: Callable[[str], Any]

    def __post_init__(self):
        if not self.name or any(c.isspace() for c in self.name):
            raise ValueError(f"invalid option name: {self.name!r}")

    def map(self, g) -> OptionSpec:
        default = None if self.default is None else g(self.default)
        reader = self.reader

        def read(s):
            r = reader(s)
            return None if r is None else g(r)

        return OptionSpec(self.name, default, read)


def option(name: str, reader: Callable[[str], Any] = identity, default=None) -> FreeA:
    return one(OptionSpec(name, default, reader))


@dataclass(frozen=True)
class UserRecord:
    username: str
    fullname: str
    id: int


_INT = re.compile(r"-?[0-9]+")


def read_int(s: str) -> Optional[int]:
    if _INT.fullmatch(s):
        return int(s)
    return None


def user_parser() -> FreeA:
    return lift3(
        UserRecord,
        option("username"),
        option("fullname", default=""),
        option("id", read_int),
    )


def parser_default(p: FreeA) -> Optional[Any]:
    return raise_(lambda opt: opt.default, OPTIONAL, p)


def all_options(p: FreeA) -> list[str]:
    return raise_(lambda opt: Const([opt.name]), CONCAT, p).accumulated


def match_opt(opt: str, value: str, p: FreeA) -> Optional[FreeA]:
    """Feed ``value`` to the first option named by ``opt``.

    Returns the parser with that option replaced by its parsed value, or
    ``None`` if no option matches or the reader rejects ``value``.
    """
    skipped = []
    while isinstance(p, Ap):
        if opt == "--" + p.head.name:
            f = p.head.reader(value)
            if f is None:
                return None
            out = map_fa(f, p.tail)
            for head in reversed(skipped):
                out = Ap(head, out)
            return out
        skipped.append(p.head)
        p = p.tail
    return None


def run_parser(p: FreeA, args: Sequence[str]) -> Optional[Any]:
    if len(args) % 2:
        return None
    for i in range(0, len(args), 2):
        p = match_opt(args[i], args[i + 1], p)
        if p is None:
            return None
    return parser_default(p)


def help_text(p: FreeA) -> str:
    return "".join(f"  --{name}\n" for name in all_options(p))


def main(argv: Sequence[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    parser = user_parser()
    if args == ["--help"]:
        sys.stdout.write("usage: create_user [options]\noptions:\n" + help_text(parser))
        return 0
    user = run_parser(parser, args)
    if user is None:
        sys.stderr.write("error: invalid arguments\n")
        return 1
    sys.stdout.write(f"username={user.username} fullname={user.fullname} id={user.id}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
