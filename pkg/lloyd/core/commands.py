"""Shared plumbing of the ``exact``, ``sample``, ``charfn`` and ``check``
management commands: option validation, exit codes, manifests and records.
"""
import logging
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from measures.spectral import EnergyGrid
from .exceptions import (
    InvalidArgumentError, LloydError, ResourceCapError, SampleError,
)
from .manifest import RunManifest

logger = logging.getLogger(__name__)

CHECK_FAILED = 1
USAGE = 2
RESOURCE_CAP = 3


def exit_code(error):
    if isinstance(error, SampleError):
        error = error.cause
    if isinstance(error, ResourceCapError):
        return RESOURCE_CAP
    if isinstance(error, InvalidArgumentError):
        return USAGE
    return CHECK_FAILED


FLAGS = {'scale': '--lambda', 'name': 'name'}


def _flag(field):
    return FLAGS.get(field, '--' + field.replace('_', '-'))


def _form_errors(form):
    messages = []
    for field, errors in form.errors.items():
        prefix = '' if field == '__all__' else f'{_flag(field)}: '
        messages.extend(prefix + error for error in errors)
    return '; '.join(messages)


def _option_value(value):
    return str(value) if isinstance(value, EnergyGrid) else value


class LloydCommand(BaseCommand):
    """Validate options with ``form_class``, then ``compute`` and record.

    ``compute(data, options)`` returns the list of files it wrote.
    """

    form_class = None

    def add_output_arguments(self, parser):
        parser.add_argument(
            '--out',
            help='output file; a <name>.manifest.json is written next to it. '
                 'Without it the table goes to stdout.',
        )
        parser.add_argument(
            '--record', action='store_true',
            help='also store the run in the database',
        )

    def add_sampling_arguments(self, parser):
        parser.add_argument('--samples', type=int, dest='samples')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument(
            '--workers', type=int, default=settings.LLOYD_WORKERS,
            help='threads evaluating disorder samples',
        )

    @property
    def subcommand(self):
        return self.__module__.rsplit('.', 1)[-1]

    def clean_options(self, options):
        form = self.form_class(data={
            name: options.get(name) for name in self.form_class.base_fields
        })
        if not form.is_valid():
            raise CommandError(_form_errors(form), returncode=USAGE)
        if options.get('workers', 1) < 1:
            raise CommandError('--workers must be >= 1', returncode=USAGE)
        return form.cleaned_data

    def manifest_parameters(self, data, options):
        parameters = {
            name: _option_value(value) for name, value in data.items()
        }
        if 'workers' in options:
            parameters['workers'] = options['workers']
        return parameters

    def handle(self, *args, **options):
        data = self.clean_options(options)
        self.meta = {}
        logger.info('%s started', self.subcommand)
        started = time.perf_counter()
        try:
            outputs = self.compute(data, options)
        except LloydError as error:
            logger.error('%s failed: %s', self.subcommand, error)
            raise CommandError(str(error), returncode=exit_code(error))
        manifest = RunManifest(
            subcommand=self.subcommand,
            parameters=self.manifest_parameters(data, options),
            master_seed=data.get('seed', 0),
            wall_time=time.perf_counter() - started,
            outputs=[str(path) for path in outputs],
            meta=self.meta,
        )
        if options.get('out'):
            path = manifest.write(options['out'])
            logger.info('wrote %s and %s', options['out'], path)
        if options.get('record'):
            run = manifest.save_record()
            self.recorded(run)
            self.stdout.write(self.style.SUCCESS(f'recorded {run}'))
        self.conclude()

    def target(self, options):
        return options.get('out') or self.stdout

    def outputs(self, options):
        return [options['out']] if options.get('out') else []

    def warn(self, message):
        logger.warning(message)
        self.stderr.write(self.style.WARNING(message))

    def declare_tail_mass(self, tail):
        """Record the weight outside the grid window in the manifest."""
        self.meta['tail_mass'] = tail
        if tail > settings.TAIL_MASS_WARNING:
            self.warn(f'{tail:.3g} of the spectral weight lies outside '
                      'the grid window')

    def compute(self, data, options):
        raise NotImplementedError

    def recorded(self, run):
        pass

    def conclude(self):
        pass
