import math

from django.db import models

from core.manifest import seed_digits
from core.models import Run
from core.output import plain


def _finite_or_none(values):
    # SQLite JSON columns reject Infinity and NaN
    return {
        key: value if value is None or math.isfinite(value) else None
        for key, value in values.items()
    }


class CheckRecord(models.Model):
    run = models.ForeignKey(
        Run,
        on_delete=models.CASCADE,
        related_name='reports',
    )
    name = models.CharField(max_length=32)
    parameters = models.JSONField(default=dict)
    metrics = models.JSONField(default=dict)
    thresholds = models.JSONField(default=dict)
    seed = models.CharField(max_length=20, blank=True)
    passed = models.BooleanField()
    runtime = models.FloatField(default=0.0)

    class Meta:
        ordering = ['run', 'name']

    def __str__(self):
        return f'{self.name}: {"pass" if self.passed else "fail"}'

    @classmethod
    def from_report(cls, run, report):
        return cls.objects.create(
            run=run,
            name=report.name,
            parameters=plain(report.parameters),
            metrics=_finite_or_none(plain(report.metrics)),
            thresholds=_finite_or_none(plain(report.thresholds)),
            seed=seed_digits(report.seed),
            passed=report.passed,
            runtime=report.runtime,
        )
