"""Exception hierarchy for the toolkit."""


class RouterSimError(Exception):
    """Base class for all toolkit errors."""


class InvalidSpecError(RouterSimError, ValueError):
    """Circuit or configuration values violate a physical invariant."""


class NumericalConditioningError(RouterSimError):
    """A matrix operation failed or is too ill-conditioned to trust."""


class TransmonLimitError(RouterSimError):
    """A mode left the transmon regime E_J/E_C >= 20."""


class DegenerateDetuningError(RouterSimError):
    """A qubit-switch pair is too close to resonance for perturbation theory."""


class PoleProximityError(RouterSimError):
    """Impedance requested too close to a network pole."""

    def __init__(self, msg, pole_frequency=None):
        super().__init__(msg)
        self.pole_frequency = pole_frequency


class DispersiveConditionError(RouterSimError):
    """The |g| << |Delta| validity condition does not hold."""


class StraddlingResonanceError(RouterSimError):
    """Detuning sits on a pole of the exchange-ZZ formula."""


class StiffnessError(RouterSimError):
    """Adaptive integrator step size underflowed."""


class IntegratorFailureError(RouterSimError):
    """A propagated state violated trace/positivity tolerances."""


class CalibrationFailureError(RouterSimError):
    """Gate calibration did not reach its target; carries the best point."""

    def __init__(self, msg, best=None):
        super().__init__(msg)
        self.best = best


class FitFailureError(RouterSimError):
    """Decay-curve fit did not converge; carries the raw curves."""

    def __init__(self, msg, depths=None, values=None):
        super().__init__(msg)
        self.depths = depths
        self.values = values


class ReconstructionFailureError(RouterSimError):
    """Density-matrix reconstruction failed; carries diagnostics."""


class UnresolvedGateError(RouterSimError):
    """A circuit references a two-qubit gate with no calibration."""


class RegistryError(RouterSimError, KeyError):
    """Unknown experiment kind."""
