import asyncio
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

from stacksort_roots.algebra.sturm import certify
from stacksort_roots.combinatorics.descents import count_partition, merge_counts
from stacksort_roots.combinatorics.stacksort import check_enumeration
from stacksort_roots.model.certificate import RootCertificate
from stacksort_roots.model.constants import DEFAULT_CONJECTURE_MAX_N
from stacksort_roots.model.enums import CountingMethod, get_or_parse
from stacksort_roots.model.exception import EnumerationLimitError
from stacksort_roots.model.shared import BaseDictPayload
from stacksort_roots.model.table import DescentTable
from stacksort_roots.utilities.config import resolve_max_n

_LOGGER = logging.getLogger(__name__)

T = TypeVar('T')


class ConjectureEntry(BaseDictPayload):
    """
    One (n, t) point of the real-rootedness scan over brute force descent polynomials.
    """
    _payload_fields = ('n', 't', 'counts', 'real_rooted', 'certificate')

    def __init__(self, table: DescentTable, certificate: RootCertificate, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.table = table
        self.certificate = certificate

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def t(self) -> int:
        return self.table.t

    @property
    def counts(self) -> List[int]:
        return self.table.counts

    @property
    def real_rooted(self) -> bool:
        return self.certificate.is_real_rooted


class TabulationManager(object):
    """
    Runs the expensive enumerations of the package. S_n is split by first letter into n partitions,
    counted in a process pool and merged; finished tables are cached in a registry so that
    a scan never enumerates the same (n, t) twice.

    With `jobs == 1` everything runs inline in the calling process. Use the manager as an async
    context manager, or call :meth:`close` when done, to release the pool.
    """

    def __init__(self,
                 max_n: Optional[int] = None,
                 jobs: Optional[int] = None,
                 *args,
                 **kwords) -> None:
        self._max_n = resolve_max_n(max_n)
        self._jobs = jobs if jobs is not None else (os.cpu_count() or 1)
        if self._jobs < 1:
            raise ValueError(f"The number of jobs must be positive, got {self._jobs}")
        self._executor = ProcessPoolExecutor(max_workers=self._jobs) if self._jobs > 1 else None
        self._table_registry = TableRegistry()

    @property
    def max_n(self) -> int:
        return self._max_n

    @property
    def jobs(self) -> int:
        return self._jobs

    @property
    def registry(self) -> 'TableRegistry':
        return self._table_registry

    def close(self):
        if self._executor is not None:
            _LOGGER.debug("Shutting down the worker pool.")
            self._executor.shutdown(wait=True)
            self._executor = None

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        self.close()

    async def async_map(self, func: Callable[..., T], params: Iterable[Sequence[Any]]) -> List[T]:
        """
        Evaluates func(*p) for every parameter tuple p. Results are returned in the order of `params`,
        whatever the completion order. `func` and its arguments must be picklable when jobs > 1.
        """
        params = [tuple(p) for p in params]
        if self._executor is None:
            return [func(*p) for p in params]
        loop = asyncio.get_running_loop()
        futures = [loop.run_in_executor(self._executor, func, *p) for p in params]
        return list(await asyncio.gather(*futures))

    async def async_table_brute_force(self, n: int, t: int) -> DescentTable:
        """
        Builds W_t(n, .) by enumerating the n first-letter partitions of S_n concurrently.

        :param n: permutation length, within the manager's cap
        :param t: number of stack passes

        :return: the brute force table, cached for later calls
        """
        cached = self._table_registry.lookup(n, t, CountingMethod.BRUTE_FORCE)
        if cached is not None:
            return cached

        check_enumeration(n, self._max_n)
        partials = await self.async_map(count_partition, [(n, t, first, self._max_n) for first in range(1, n + 1)])
        table = DescentTable(n=n, t=t, counts=merge_counts(partials), method=CountingMethod.BRUTE_FORCE)
        _LOGGER.info(f"Enumerated {table} over {n} partitions")
        self._table_registry.enroll_table(table)
        return table

    async def async_conjecture_scan(self, n_max: Optional[int] = None) -> List[ConjectureEntry]:
        """
        Certifies W_{n,t}(x) for every n <= n_max and t = 1..n-1 (t = 1 alone for n = 1).
        A polynomial that is not real-rooted would be a counterexample: it is logged and returned
        like any other entry.

        :param n_max: largest permutation length, defaults to DEFAULT_CONJECTURE_MAX_N

        :return: one entry per (n, t), ordered by n then t
        """
        n_max = DEFAULT_CONJECTURE_MAX_N if n_max is None else n_max
        if n_max > self._max_n:
            _LOGGER.error(f"Conjecture scan up to n = {n_max} exceeds the cap {self._max_n}.")
            raise EnumerationLimitError(n=n_max, limit=self._max_n)

        points = [(n, t) for n in range(1, n_max + 1) for t in range(1, max(n - 1, 1) + 1)]
        tables = await asyncio.gather(*(self.async_table_brute_force(n, t) for n, t in points))

        res = []
        for table in tables:
            cert = certify(table.polynomial())
            entry = ConjectureEntry(table, cert)
            if not entry.real_rooted:
                _LOGGER.warning(f"COUNTEREXAMPLE: W_{{{table.n},{table.t}}}(x) = {table.polynomial()} "
                                f"is not real-rooted ({cert})")
            res.append(entry)
        _LOGGER.info(f"Conjecture scan up to n = {n_max}: {len(res)} polynomials, "
                     f"{sum(1 for e in res if not e.real_rooted)} not real-rooted")
        return res


class TableRegistry(object):
    def __init__(self):
        self._tables_by_key = {}

    @staticmethod
    def _key(n: int, t: int, method: Union[str, CountingMethod]) -> Tuple[int, int, CountingMethod]:
        return n, t, get_or_parse(CountingMethod, method)

    def relinquish_table(self, n: int, t: int, method: Union[str, CountingMethod]):
        key = self._key(n, t, method)
        if key not in self._tables_by_key:
            raise ValueError(f"Cannot relinquish table {key} as it does not belong to this registry.")
        del self._tables_by_key[key]
        _LOGGER.debug(f"Table {key} removed from registry")

    def enroll_table(self, table: DescentTable):
        key = self._key(table.n, table.t, table.counting_method)
        if key in self._tables_by_key:
            _LOGGER.warning(f"Table {key} has been already added to the registry.")
            return
        _LOGGER.debug(f"Adding table {key} to registry.")
        self._tables_by_key[key] = table

    def lookup(self, n: int, t: int, method: Union[str, CountingMethod]) -> Optional[DescentTable]:
        return self._tables_by_key.get(self._key(n, t, method))

    def find_all_by(self,
                    n: Optional[int] = None,
                    t: Optional[int] = None,
                    method: Optional[Union[str, CountingMethod]] = None) -> List[DescentTable]:
        res = self._tables_by_key.values()
        if n is not None:
            res = filter(lambda tb: tb.n == n, res)
        if t is not None:
            res = filter(lambda tb: tb.t == t, res)
        if method is not None:
            method = get_or_parse(CountingMethod, method)
            res = filter(lambda tb: tb.counting_method == method, res)
        return sorted(res, key=lambda tb: (tb.n, tb.t))

    def __len__(self) -> int:
        return len(self._tables_by_key)
