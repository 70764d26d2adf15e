from django import forms
from django.core.exceptions import ValidationError

from core.exceptions import InvalidArgumentError
from measures.spectral import EnergyGrid
from verify.checks import CHECKS, PRESETS

MODELS = (
    ('lattice', 'Z^d adjacency'),
    ('bethe', 'Bethe lattice'),
    ('continuum', '1D continuum'),
)
SEED_MAX = 2 ** 64 - 1


class GridField(forms.CharField):
    """``min:max:step`` energy or time grid."""

    def to_python(self, value):
        if isinstance(value, EnergyGrid):
            return value
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        try:
            return EnergyGrid.parse(value)
        except InvalidArgumentError as error:
            raise ValidationError(str(error), code='grid')


class ScaleMixin:
    def clean_scale(self):
        scale = self.cleaned_data['scale']
        if scale is not None and not scale > 0:
            raise ValidationError('lambda must be positive')
        return scale


class ExactForm(ScaleMixin, forms.Form):
    model = forms.ChoiceField(choices=MODELS)
    dim = forms.IntegerField(min_value=1, initial=1)
    k = forms.IntegerField(min_value=2, initial=2)
    scale = forms.FloatField()
    grid = GridField()


class SampleForm(ScaleMixin, forms.Form):
    model = forms.ChoiceField(choices=MODELS)
    dim = forms.IntegerField(min_value=1, initial=1)
    k = forms.IntegerField(min_value=2, initial=2)
    size = forms.IntegerField(min_value=1, required=False)
    depth = forms.IntegerField(min_value=0, required=False)
    h = forms.FloatField(required=False)
    boundary = forms.ChoiceField(
        choices=(('periodic', 'periodic'), ('dirichlet', 'dirichlet')),
    )
    samples = forms.IntegerField(min_value=1)
    scale = forms.FloatField()
    broaden = forms.FloatField(min_value=0.0)
    seed = forms.IntegerField(min_value=0, max_value=SEED_MAX)
    site = forms.IntegerField(min_value=0)
    grid = GridField()
    compare_exact = forms.BooleanField(required=False)
    all_sites = forms.BooleanField(required=False)

    def clean(self):
        data = super().clean()
        model = data.get('model')
        if model in ('lattice', 'continuum') and data.get('size') is None:
            raise ValidationError(f'--size is required for the {model} model')
        if model == 'bethe' and data.get('depth') is None:
            raise ValidationError('--depth is required for the bethe model')
        if model == 'continuum' and not data.get('h'):
            raise ValidationError('--h is required for the continuum model')
        if data.get('all_sites') and model != 'lattice':
            raise ValidationError('--all-sites needs the lattice model')
        if data.get('compare_exact'):
            broaden = data.get('broaden')
            if model == 'continuum' and broaden:
                raise ValidationError(
                    'continuum comparison is for the IDS (--broaden 0)'
                )
            if model != 'continuum' and broaden == 0:
                raise ValidationError(
                    'density comparison needs --broaden > 0'
                )
        return data


class CharfnForm(ScaleMixin, forms.Form):
    model = forms.ChoiceField(choices=MODELS[:2])
    dim = forms.IntegerField(min_value=1, initial=1)
    k = forms.IntegerField(min_value=2, initial=2)
    size = forms.IntegerField(min_value=1, required=False)
    depth = forms.IntegerField(min_value=0, required=False)
    samples = forms.IntegerField(min_value=1)
    scale = forms.FloatField()
    t_grid = GridField()
    psi_offset = forms.IntegerField(min_value=0)
    seed = forms.IntegerField(min_value=0, max_value=SEED_MAX)

    def clean(self):
        data = super().clean()
        if data.get('model') == 'lattice' and data.get('size') is None:
            raise ValidationError('--size is required for the lattice model')
        if data.get('model') == 'bethe' and data.get('depth') is None:
            raise ValidationError('--depth is required for the bethe model')
        return data


class CheckForm(forms.Form):
    name = forms.ChoiceField(
        choices=[('all', 'all')] + [(name, name) for name in CHECKS],
    )
    seed = forms.IntegerField(min_value=0, max_value=SEED_MAX)
    preset = forms.ChoiceField(choices=[(name, name) for name in PRESETS])
    force_threshold = forms.FloatField(required=False)
