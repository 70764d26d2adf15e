from django.conf import settings

from core.commands import LloydCommand
from core.forms import SampleForm
from ensemble.builders import ContinuumSpec, LatticeBoxSpec, TreeSpec
from free_models.bethe import BetheFreeModel, bethe_dos_smoothed
from free_models.continuum import ContinuumFreeModel, continuum_ids_smoothed
from free_models.lattice import LatticeFreeModel, lattice_dos_smoothed
from measures.cauchy import CauchyKernel
from spectra.montecarlo import dos_mc


def ensemble_spec(data):
    if data['model'] == 'lattice':
        return LatticeBoxSpec(data['dim'], data['size'], data['boundary'])
    if data['model'] == 'bethe':
        return TreeSpec(data['k'], data['depth'])
    return ContinuumSpec(data['size'], data['h'])


def exact_reference(data, kernel, energies):
    """Free curve the sample mean is compared with at lambda + eta."""
    tol = settings.QUAD_ABS_TOL
    if data['model'] == 'continuum':
        return continuum_ids_smoothed(
            ContinuumFreeModel(), kernel, energies, tol=tol
        )
    widened = kernel.shifted(data['broaden'])
    if data['model'] == 'lattice':
        return lattice_dos_smoothed(
            LatticeFreeModel(data['dim']), widened, energies, tol=tol
        )
    return bethe_dos_smoothed(
        BetheFreeModel(data['k']), widened, energies, tol=tol
    )


class Command(LloydCommand):
    help = ('Disorder-averaged local density of states (--broaden > 0) or '
            'integrated density of states (--broaden 0) by Monte Carlo.')
    form_class = SampleForm

    def add_arguments(self, parser):
        parser.add_argument('--model', help='lattice, bethe or continuum')
        parser.add_argument('--dim', type=int, default=1)
        parser.add_argument('--k', type=int, default=2)
        parser.add_argument('--size', type=int,
                            help='box side (lattice) or length (continuum)')
        parser.add_argument('--depth', type=int, help='tree depth (bethe)')
        parser.add_argument('--h', type=float, default=0.05,
                            help='continuum mesh width')
        parser.add_argument('--boundary', default='periodic')
        parser.add_argument('--lambda', dest='scale', type=float,
                            help='Cauchy width')
        parser.add_argument('--broaden', type=float, default=0.1)
        parser.add_argument('--site', type=int, default=0)
        parser.add_argument(
            '--all-sites', action='store_true', dest='all_sites',
            help='average the local density over every site of the box',
        )
        parser.add_argument('--grid',
                            help='min:max:step, e.g. --grid=-6:6:0.05')
        parser.add_argument(
            '--compare-exact', action='store_true', dest='compare_exact',
            help='append the exact curve and pointwise z-scores',
        )
        self.add_sampling_arguments(parser)
        self.add_output_arguments(parser)

    def compute(self, data, options):
        kernel = CauchyKernel(data['scale'])
        estimate = dos_mc(
            ensemble_spec(data), kernel, data['grid'], data['samples'],
            data['seed'], data['broaden'],
            site=None if data['all_sites'] else data['site'],
            workers=options['workers'], cap=settings.DENSE_EIG_CAP,
        )
        if estimate.std_error is None:
            self.warn('a single sample has no standard error; '
                      'the std_error column is left out')
        if 'tail_mass' in estimate.meta:
            self.declare_tail_mass(estimate.meta['tail_mass'])
        extra = []
        if data['compare_exact']:
            exact = exact_reference(data, kernel, estimate.x)
            extra.append(('exact', exact))
            if estimate.std_error is not None:
                extra.append(('z', estimate.z_scores(exact)))
        estimate.to_csv(self.target(options), settings.FLOAT_FORMAT,
                        extra=extra)
        return self.outputs(options)
