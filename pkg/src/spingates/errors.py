"""Exception and warning types."""


class SpinGatesError(Exception):
    """Base class for all library errors."""


class ConfigError(SpinGatesError):
    """Invalid configuration: unknown/missing channels, bad amplitudes, bad files."""


class SynthesisError(SpinGatesError):
    """A pulse sequence cannot be synthesized from the given parameters."""


class VerificationError(SpinGatesError):
    """A synthesized sequence failed the unitary verification oracle."""


class MinimumStepTimeWarning(UserWarning):
    """A synthesized active pulse step is shorter than the 100 ps hardware floor."""


class HighFieldApproximationWarning(UserWarning):
    """The high-field condition gamma_e*B0 >> A is weakly satisfied."""
