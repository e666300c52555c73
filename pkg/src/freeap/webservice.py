"""A small web-service DSL with a deterministic in-memory transport.

Monadic programs (``FreeM``) may choose later requests from earlier
responses; applicative programs (``FreeA``) cannot, which is what lets
:func:`analyze` report on them without running anything.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Mapping

from freeap.core import CONCAT, Const, identity
from freeap.free import FreeA, count, one, spine
from freeap.monad import FreeM, Return, Step, bind, lift_a2m, lift_effect, sequence_
from freeap.transform import raise_


@dataclass(frozen=True)
class Get:
    url: str
    params: tuple
    resume: Callable[[str], Any]

    def map(self, g) -> Get:
        resume = self.resume
        return Get(self.url, self.params, lambda response: g(resume(response)))


@dataclass(frozen=True)
class Post:
    url: str
    params: tuple
    body: str
    resume: Any

    def map(self, g) -> Post:
        return Post(self.url, self.params, self.body, g(self.resume))


@dataclass(frozen=True)
class Request:
    """What a request looked like, without its continuation."""

    method: str
    url: str
    params: tuple
    body: str | None = None

    @classmethod
    def of(cls, effect: Get | Post) -> Request:
        if isinstance(effect, Get):
            return cls("GET", effect.url, effect.params)
        return cls("POST", effect.url, effect.params, effect.body)


def host(url: str) -> str:
    return url.split("/", 1)[0]


class TransportError(Exception):
    """A GET hit a url the server has no response for.

    Carries the trace up to and including the failed request and the server
    state at that point.
    """

    def __init__(self, url: str, trace=(), server=None):
        super().__init__(url)
        self.url = url
        self.trace = list(trace)
        self.server = server


@dataclass(frozen=True)
class MockServer:
    responses: Mapping[str, str] = field(default_factory=dict)
    post_log: tuple = ()

    @classmethod
    def from_json(cls, source: str | Path) -> MockServer:
        """Load responses from a JSON object of ``url -> response`` (text or path)."""
        if isinstance(source, Path) or not source.lstrip().startswith("{"):
            source = Path(source).read_text()
        data = json.loads(source)
        if not isinstance(data, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in data.items()
        ):
            raise ValueError("fixture must map url strings to response strings")
        return cls(dict(data))

    def handle_post(self, url, params, body) -> MockServer:
        return replace(self, post_log=self.post_log + ((url, tuple(params), body),))

    def post_log_json(self) -> str:
        return json.dumps(
            [{"url": u, "params": list(p), "body": b} for u, p, b in self.post_log],
            indent=2,
        )


# -- smart constructors -----------------------------------------------------


def get(url: str, params=()) -> FreeM[str]:
    return lift_effect(Get(url, tuple(params), identity))


def post(url: str, params, body: str) -> FreeM[tuple]:
    return lift_effect(Post(url, tuple(params), body, ()))


def get_a(url: str, params=()) -> FreeA[str]:
    return one(Get(url, tuple(params), identity))


def post_a(url: str, params, body: str) -> FreeA[tuple]:
    return one(Post(url, tuple(params), body, ()))


def copy(src_url, src_params, dst_url, dst_params) -> FreeM[tuple]:
    return bind(get(src_url, src_params), lambda body: post(dst_url, dst_params, body))


def update_emails(new_email: str) -> FreeM[tuple]:
    def post_all(entry_urls: str):
        return sequence_(post(u, ["updateEmail"], new_email) for u in entry_urls.split())

    return bind(get("myblog.com", ["list_entries"]), post_all)


# -- interpreters -----------------------------------------------------------


def _perform(effect, server: MockServer, trace: list):
    trace.append(Request.of(effect))
    if isinstance(effect, Get):
        if effect.url not in server.responses:
            raise TransportError(effect.url, trace, server)
        return effect.resume(server.responses[effect.url]), server
    return effect.resume, server.handle_post(effect.url, effect.params, effect.body)


def run_free(m: FreeM, server: MockServer):
    """Run a monadic program; returns ``(result, trace, server)``."""
    trace: list[Request] = []
    while isinstance(m, Step):
        m, server = _perform(m.effect, server, trace)
    return m.value, trace, server


def run_freea(u: FreeA, server: MockServer):
    """Run an applicative program directly, head effect first."""
    trace: list[Request] = []
    heads, value = spine(u)
    fs = []
    for head in heads:
        f, server = _perform(head, server, trace)
        fs.append(f)
    for f in reversed(fs):
        value = f(value)
    return value, trace, server


# -- static analysis --------------------------------------------------------


@dataclass(frozen=True)
class RequestReport:
    total: int
    per_host: dict
    batches: list  # [(host, [Request, ...]), ...] in order of first appearance


def requests(u: FreeA) -> list[Request]:
    return raise_(lambda e: Const([Request.of(e)]), CONCAT, u).accumulated


def analyze(u: FreeA) -> RequestReport:
    reqs = requests(u)
    per_host = Counter(host(r.url) for r in reqs)
    grouped: dict[str, list] = {}
    for r in reqs:
        grouped.setdefault(host(r.url), []).append(r)
    return RequestReport(len(reqs), dict(per_host), list(grouped.items()))


def within_quota(u: FreeA, quota_url: str, report_url: str) -> FreeM:
    """Run ``u``, then report its result only if the server's quota allows it.

    The number of requests ``u`` makes is known before it runs and feeds
    the monadic decision that follows.
    """
    planned = count(u)

    def decide(result):
        def check(quota: str):
            if int(quota) >= planned + 1:
                return bind(post(report_url, ["result"], str(result)), lambda _: Return(result))
            return Return(result)

        return bind(get(quota_url), check)

    return bind(lift_a2m(u), decide)
