import json
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import BaseCommand, CommandError

from core.commands import USAGE

REPLAYABLE = ('exact', 'sample', 'charfn', 'check')


class Command(BaseCommand):
    help = 'Re-run the command recorded in a manifest, writing to --out.'

    def add_arguments(self, parser):
        parser.add_argument('manifest', help='path to a *.manifest.json file')
        parser.add_argument('--out', required=True)

    def handle(self, *args, **options):
        path = Path(options['manifest'])
        try:
            manifest = json.loads(path.read_text(encoding='utf-8'))
        except (OSError, ValueError) as error:
            raise CommandError(f'cannot read {path}: {error}',
                               returncode=USAGE)
        subcommand = manifest.get('subcommand')
        if subcommand not in REPLAYABLE:
            raise CommandError(f'{path} names no known subcommand',
                               returncode=USAGE)
        parameters = {
            name: value for name, value in manifest['parameters'].items()
            if value is not None
        }
        positional = [parameters.pop('name')] if 'name' in parameters else []
        call_command(subcommand, *positional, out=options['out'],
                     stdout=self.stdout, stderr=self.stderr, **parameters)
