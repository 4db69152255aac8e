from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np


def chunked(fn, n_rows: int, workers: int = 1):
    """Evaluate ``fn(lo, hi)`` over contiguous row blocks and concatenate in order.

    ``fn`` must be elementwise across rows, which makes the merged result
    independent of ``workers``. Every returned item is concatenated on axis 0.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    bounds = np.linspace(0, n_rows, min(workers, max(n_rows, 1)) + 1).astype(int)
    spans = list(zip(bounds[:-1], bounds[1:]))
    if len(spans) == 1:
        parts = [fn(*spans[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            parts = list(pool.map(lambda s: fn(*s), spans))
    if isinstance(parts[0], tuple):
        return tuple(np.concatenate(col) for col in zip(*parts))
    return np.concatenate(parts)
