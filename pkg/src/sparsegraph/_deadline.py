"""Cooperative wall-clock deadlines.

Long-running loops call :func:`checkpoint`; inside a :func:`deadline` block
it raises :class:`Timeout` once the budget is spent.  Outside any block it is
a cheap no-op, so library users never see it.
"""
from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar

_current: ContextVar[float | None] = ContextVar("sparsegraph_deadline", default=None)


class Timeout(Exception):
    pass


@contextmanager
def deadline(seconds: float | None):
    if seconds is None:
        yield
        return
    limit = time.monotonic() + seconds
    outer = _current.get()
    if outer is not None:
        limit = min(limit, outer)
    token = _current.set(limit)
    try:
        yield
    finally:
        _current.reset(token)


def checkpoint() -> None:
    limit = _current.get()
    if limit is not None and time.monotonic() > limit:
        raise Timeout()


def expired() -> bool:
    limit = _current.get()
    return limit is not None and time.monotonic() > limit
