from django.db import models


class Run(models.Model):
    """One invocation of a subcommand, stored with ``--record``."""

    subcommand = models.CharField(max_length=16)
    parameters = models.JSONField(default=dict)
    master_seed = models.CharField(max_length=20, blank=True)
    version = models.CharField(max_length=32)
    wall_time = models.FloatField(default=0.0)
    outputs = models.JSONField(default=list)
    meta = models.JSONField(default=dict)
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created']

    def __str__(self):
        return f'{self.subcommand} #{self.pk}'
