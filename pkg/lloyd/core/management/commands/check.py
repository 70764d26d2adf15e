from django.conf import settings
from django.core.management.base import CommandError

from core.commands import CHECK_FAILED, LloydCommand
from core.forms import CheckForm
from core.output import write_json
from verify.checks import CHECKS, run_check
from verify.models import CheckRecord
from verify.reports import format_table


class Command(LloydCommand):
    help = ('Run a named acceptance check, or all of them, and report '
            'metrics against thresholds. Exits 1 if any check fails.')
    form_class = CheckForm

    def add_arguments(self, parser):
        parser.add_argument('name', help=f'all or one of {", ".join(CHECKS)}')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--preset', default='full',
                            help='full (acceptance sizes) or quick')
        parser.add_argument(
            '--force-threshold', dest='force_threshold', type=float,
            help='judge every metric against this single threshold',
        )
        parser.add_argument('--workers', type=int,
                            default=settings.LLOYD_WORKERS)
        self.add_output_arguments(parser)

    def compute(self, data, options):
        names = list(CHECKS) if data['name'] == 'all' else [data['name']]
        self.reports = [
            run_check(
                name, seed=data['seed'], preset=data['preset'],
                force_threshold=data['force_threshold'],
                workers=options['workers'],
            )
            for name in names
        ]
        self.stdout.write(format_table(self.reports))
        if options.get('out'):
            write_json(
                options['out'],
                [report.as_dict() for report in self.reports],
            )
        return self.outputs(options)

    def recorded(self, run):
        for report in self.reports:
            CheckRecord.from_report(run, report)

    def conclude(self):
        failed = [report.name for report in self.reports if not report.passed]
        if failed:
            self.stderr.write(self.style.ERROR(
                f'{len(failed)} of {len(self.reports)} checks failed: '
                f'{", ".join(failed)}'
            ))
            raise CommandError('checks failed', returncode=CHECK_FAILED)
        self.stdout.write(self.style.SUCCESS(
            f'all {len(self.reports)} checks passed'
        ))
