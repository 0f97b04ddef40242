from __future__ import annotations

import asyncio
import functools
import inspect
from collections.abc import Callable
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .oracle import Oracle


class SyncWrapper:
    """Blocking view of an Oracle: every coroutine method becomes a plain call.

    Calls share one ``asyncio.Runner``; the oracle's worker pool is released after each call.
    Refuses to run inside an event loop.
    """

    def __init__(self, oracle: Oracle) -> None:
        self._oracle = oracle
        self._runner: asyncio.Runner | None = None

    def _call(self, method: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
        if _loop_running():
            raise RuntimeError(f"oracle.sync.{method.__name__} called from a running event loop")
        if self._runner is None:
            self._runner = asyncio.Runner()
        try:
            return self._runner.run(method(*args, **kwargs))
        finally:
            self._runner.run(self._oracle.close())

    def __getattr__(self, name: str) -> Any:
        attr = getattr(self._oracle, name)
        if not inspect.iscoroutinefunction(attr):
            return attr
        return functools.wraps(attr)(functools.partial(self._call, attr))

    def close(self) -> None:
        if self._runner is not None:
            self._runner.close()
            self._runner = None


def _loop_running() -> bool:
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return False
    return True
