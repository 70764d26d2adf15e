import numpy as np
from django.conf import settings

from core.commands import LloydCommand
from core.forms import CharfnForm
from core.output import write_csv
from ensemble.builders import LatticeBoxSpec, TreeSpec
from free_models.lattice import LatticeFreeModel, lattice_offdiag_charfn
from measures.cauchy import CauchyKernel, cauchy_charfn
from spectra.montecarlo import charfn_mc, free_charfn


class Command(LloydCommand):
    help = ('Disorder-averaged <delta_0, exp(itH) psi> by Chebyshev '
            'propagation, next to exp(-lambda|t|) times the free amplitude.')
    form_class = CharfnForm

    def add_arguments(self, parser):
        parser.add_argument('--model', help='lattice or bethe')
        parser.add_argument('--dim', type=int, default=1)
        parser.add_argument('--k', type=int, default=2)
        parser.add_argument('--size', type=int, help='lattice box side')
        parser.add_argument('--depth', type=int, help='tree depth')
        parser.add_argument('--lambda', dest='scale', type=float,
                            help='Cauchy width')
        parser.add_argument('--t-grid', dest='t_grid', default='0:6:0.05',
                            help='tmin:tmax:step')
        parser.add_argument(
            '--psi-offset', dest='psi_offset', type=int, default=0,
            help='psi = delta at this offset along the first axis '
                 '(lattice) or at this vertex index (bethe)',
        )
        self.add_sampling_arguments(parser)
        self.add_output_arguments(parser)

    def compute(self, data, options):
        kernel = CauchyKernel(data['scale'])
        times = data['t_grid'].points
        offset = data['psi_offset']
        if data['model'] == 'lattice':
            spec = LatticeBoxSpec(data['dim'], data['size'])
            site = (offset,) + (0,) * (data['dim'] - 1)
            psi = spec.site_index(site)
            free = lattice_offdiag_charfn(
                LatticeFreeModel(data['dim']), site, times
            )
        else:
            spec = TreeSpec(data['k'], data['depth'])
            psi = offset
            free = free_charfn(spec, times, psi=psi)
        estimate = charfn_mc(
            spec, kernel, times, data['samples'], data['seed'], psi=psi,
            workers=options['workers'],
        )
        exact = cauchy_charfn(kernel, times) * free

        header = ['t', 'mean', 'mean_im']
        columns = [times, estimate.mean.real, estimate.mean.imag]
        if estimate.std_error is None:
            self.warn('a single sample has no standard error; '
                      'the std_error column is left out')
        else:
            header.append('std_error')
            columns.append(estimate.std_error)
        header += ['exact', 'exact_im']
        columns += [np.real(exact), np.imag(exact)]
        write_csv(self.target(options), header, columns,
                  settings.FLOAT_FORMAT)
        return self.outputs(options)
