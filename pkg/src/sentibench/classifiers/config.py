from __future__ import annotations

from dataclasses import asdict, dataclass

from ..errors import ConfigError


@dataclass(frozen=True)
class TrainConfig:
    nb_smoothing: float = 1.0
    maxent_l2: float = 0.1
    maxent_tol: float = 1e-6
    maxent_max_iters: int = 500
    svm_C: float = 1.0
    svm_tol: float = 1e-3
    svm_eps: float = 1e-12
    svm_max_passes: int = 10

    def __post_init__(self):
        positive = ("nb_smoothing", "maxent_tol", "svm_C", "svm_tol", "svm_eps")
        for name in positive:
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")
        if self.maxent_l2 < 0:
            raise ConfigError("maxent_l2 must be non-negative")
        if self.maxent_max_iters < 1 or self.svm_max_passes < 1:
            raise ConfigError("iteration limits must be at least 1")

    def to_dict(self):
        return asdict(self)
