import math
from dataclasses import dataclass, field, replace
from typing import Optional


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check.

    ``passed`` is derived from ``metrics`` and ``thresholds`` only: every
    thresholded metric must be finite and not above its threshold.
    """

    name: str
    parameters: dict
    metrics: dict
    thresholds: dict
    seed: Optional[int] = None
    runtime: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        for key, limit in self.thresholds.items():
            value = self.metrics.get(key)
            if value is None or not math.isfinite(value) or value > limit:
                return False
        return True

    def failures(self):
        return [
            key for key, limit in self.thresholds.items()
            if not (
                self.metrics.get(key) is not None
                and math.isfinite(self.metrics[key])
                and self.metrics[key] <= limit
            )
        ]

    def with_threshold(self, value):
        """Same metrics judged against ``value`` for every threshold."""
        return replace(
            self, thresholds={key: value for key in self.thresholds}
        )

    def as_dict(self):
        """JSON record; leaves out the wall time so reruns compare equal."""
        return {
            'name': self.name,
            'parameters': self.parameters,
            'metrics': self.metrics,
            'thresholds': self.thresholds,
            'seed': self.seed,
            'passed': self.passed,
            'notes': self.notes,
        }


def format_table(reports):
    """Plain-text summary, one line per thresholded metric."""
    lines = [
        f'{"check":<18} {"metric":<24} {"value":>12} {"limit":>12}  result'
    ]
    for report in reports:
        status = 'PASS' if report.passed else 'FAIL'
        for key in sorted(report.metrics):
            limit = report.thresholds.get(key)
            limit_text = f'{limit:12.4g}' if limit is not None else ' ' * 12
            lines.append(
                f'{report.name:<18} {key:<24} {report.metrics[key]:12.4g} '
                f'{limit_text}  {status}'
            )
        lines.append(f'{report.name:<18} runtime {report.runtime:.2f}s')
    return '\n'.join(lines)
