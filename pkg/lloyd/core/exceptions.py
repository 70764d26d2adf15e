class LloydError(Exception):
    """Base class of every error raised by the toolkit."""


class InvalidArgumentError(LloydError, ValueError):
    pass


class OutsideStripError(InvalidArgumentError):
    """Complex energy on or outside the strip |Im E| < lambda."""

    def __init__(self, imag, scale):
        self.imag = imag
        self.scale = scale
        super().__init__(
            f'|Im E| = {abs(imag):g} is not inside the strip of '
            f'half-width {scale:g}'
        )


class SolverFailureError(LloydError):
    def __init__(self, message, matrix_hash):
        self.matrix_hash = matrix_hash
        super().__init__(f'{message} (matrix {matrix_hash})')


class EnclosureError(LloydError):
    """Chebyshev interval does not contain the spectrum."""


class ResourceCapError(LloydError):
    pass


class SampleError(LloydError):
    """Failure while evaluating one disorder sample."""

    def __init__(self, sample_index, cause):
        self.sample_index = sample_index
        self.cause = cause
        super().__init__(f'sample {sample_index}: {cause}')
