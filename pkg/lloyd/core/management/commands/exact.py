from django.conf import settings

from core.commands import LloydCommand
from core.forms import ExactForm
from core.output import write_csv
from free_models.bethe import BetheFreeModel, bethe_dos_smoothed
from free_models.continuum import ContinuumFreeModel, continuum_ids_smoothed
from free_models.lattice import LatticeFreeModel, lattice_dos_smoothed
from measures.cauchy import CauchyKernel, window_tail_mass
from measures.spectral import GridDensity


class Command(LloydCommand):
    help = ('Exact Cauchy-smoothed density of states (lattice, bethe) or '
            'integrated density of states (continuum) on an energy grid.')
    form_class = ExactForm

    def add_arguments(self, parser):
        parser.add_argument('--model', help='lattice, bethe or continuum')
        parser.add_argument('--dim', type=int, default=1)
        parser.add_argument('--k', type=int, default=2,
                            help='branching number of the Bethe lattice')
        parser.add_argument('--lambda', dest='scale', type=float,
                            help='Cauchy width')
        parser.add_argument('--grid',
                            help='min:max:step, e.g. --grid=-6:6:0.01')
        self.add_output_arguments(parser)

    def compute(self, data, options):
        kernel = CauchyKernel(data['scale'])
        grid = data['grid']
        if data['model'] == 'continuum':
            values = continuum_ids_smoothed(
                ContinuumFreeModel(), kernel, grid.points,
                tol=settings.QUAD_ABS_TOL,
            )
            write_csv(self.target(options), ['energy', 'ids'],
                      [grid.points, values], settings.FLOAT_FORMAT)
            return self.outputs(options)
        if data['model'] == 'lattice':
            values = lattice_dos_smoothed(
                LatticeFreeModel(data['dim']), kernel, grid.points,
                tol=settings.QUAD_ABS_TOL,
            )
        else:
            values = bethe_dos_smoothed(
                BetheFreeModel(data['k']), kernel, grid.points,
                tol=settings.QUAD_ABS_TOL,
            )
        tail = float(window_tail_mass(kernel, grid.e_min, grid.e_max))
        self.declare_tail_mass(tail)
        density = GridDensity(
            grid, values, meta={'scale': kernel.scale, 'tail_mass': tail}
        )
        density.to_csv(self.target(options), settings.FLOAT_FORMAT)
        return self.outputs(options)
