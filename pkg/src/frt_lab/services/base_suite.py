"""
Suite base class
Shared config plumbing, seeded samplers and single-action dispatch for every verb
"""

from typing import Any, Callable, Dict, List, Optional

from src.frt_lab.algebra.scalar_field import QSpecialization, ScalarSampler, get_field
from src.frt_lab.core.config.run_config import RunConfig
from src.frt_lab.core.errors import ConfigError
from src.frt_lab.core.logging import logger
from src.frt_lab.models.report_models import CheckRecord


class Suite:
    """One CLI verb: a full run plus named single actions"""

    name = "suite"
    actions: Dict[str, str] = {}

    def __init__(self, config: RunConfig):
        self.config = config
        self.field = get_field(config.field)
        self.q_spec: QSpecialization = config.q_spec()
        self.q = self.q_spec.q
        self.degree_cap = config.degree_cap

    def samples(self, key: Optional[str] = None) -> int:
        return self.config.sample_count(key or self.name)

    def sampler(self, offset: int = 0, with_q: bool = True) -> ScalarSampler:
        """Deterministic sampler; offsets keep independent streams apart"""
        return ScalarSampler(
            self.config.seed + offset,
            self.field,
            q=self.q if with_q else None,
            guard_bound=self.config.guard_bound,
        )

    def require_generic_q(self):
        if not self.q_spec.generic:
            raise ConfigError(f"the {self.name} suite needs a generic q, got {self.q_spec}", key="q")

    def run_all(self) -> List[CheckRecord]:
        raise NotImplementedError

    def run(self, action: Optional[str] = None, params: Optional[Dict[str, Any]] = None) -> List[CheckRecord]:
        if action is None:
            logger.info(f"running the full {self.name} suite")
            return self.run_all()
        if action not in self.actions:
            raise ConfigError(f"unknown {self.name} action '{action}'; choose from {sorted(self.actions)}",
                              key="action")
        logger.info(f"running {self.name} {action}")
        handler: Callable[[Dict[str, Any]], List[CheckRecord]] = getattr(self, self.actions[action])
        return handler(params or {})
