"""Evaluate a check over pre-drawn samples and merge the outcomes.

Samples are always drawn sequentially from one seeded generator before any
evaluation starts, so a report depends on (samples, seed) only and not on
how many threads evaluated it.
"""
import logging
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from isotri.verification.typedefs import CheckReport, FailureDetail

logger = logging.getLogger(__name__)

# Failing items kept in a report; the failure count is never capped.
MAX_DETAILS = 100

Inputs = Dict[str, float]
Margins = List[Tuple[str, float]]


class Evaluation(NamedTuple):
    """Slack of every checked item for one sample."""

    margins: Margins
    category: Optional[str] = None


Evaluate = Callable[[Inputs], Evaluation]


def _evaluate_all(
    inputs: Sequence[Inputs], evaluate: Evaluate, max_workers: int
) -> List[Evaluation]:
    if max_workers == 1 or len(inputs) < 2:
        return [evaluate(x) for x in inputs]
    chunks = [
        [inputs[int(i)] for i in block]
        for block in np.array_split(np.arange(len(inputs)), max_workers)
    ]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        results = executor.map(lambda chunk: [evaluate(x) for x in chunk], chunks)
        return [evaluation for chunk in results for evaluation in chunk]


def run_check(
    lemma_id: str,
    inputs: Sequence[Inputs],
    evaluate: Evaluate,
    seed: int,
    max_workers: int = 1,
) -> CheckReport:
    """Evaluate every sample and fold the margins into a report.

    An item fails when its margin is not strictly positive, NaN included.
    """
    evaluations = _evaluate_all(inputs, evaluate, max_workers)
    failures = 0
    worst = math.inf
    details: List[FailureDetail] = []
    tally: Counter = Counter()
    for index, (sample, evaluation) in enumerate(zip(inputs, evaluations)):
        failed = False
        for item, margin in evaluation.margins:
            if math.isnan(margin):
                worst = -math.inf
            else:
                worst = min(worst, margin)
            if not margin > 0:
                failed = True
                if len(details) < MAX_DETAILS:
                    details.append(
                        FailureDetail(
                            index=index, item=item, margin=margin, inputs=dict(sample)
                        )
                    )
        failures += failed
        if evaluation.category is not None:
            tally[evaluation.category] += 1

    if failures:
        logger.warning(
            "%s: %d of %d samples failed (worst margin %.3g)",
            lemma_id,
            failures,
            len(inputs),
            worst,
        )
    else:
        logger.info("%s: %d samples, worst margin %.3g", lemma_id, len(inputs), worst)
    return CheckReport(
        lemma_id=lemma_id,
        samples=len(inputs),
        failures=failures,
        worst_margin=worst,
        seed=seed,
        details=details,
        tally=dict(sorted(tally.items())),
    )
