from abc import ABC, abstractmethod

from ..drive_protocol import DomainError


class FieldSchedule(ABC):
    @abstractmethod
    def field_at(self, t: float) -> float:
        pass


class LinearFieldSchedule(FieldSchedule):
    """h(t) = 1 + t/tau, sweeping the field from 0 to 2 through the critical point at t = 0."""

    def __init__(self, tau: float):
        if tau <= 0:
            msg = f'tau must be > 0, got {tau}'
            raise DomainError(msg)
        self.tau = tau

    def field_at(self, t: float) -> float:
        return 1 + t / self.tau

    def __repr__(self) -> str:
        return f'LinearFieldSchedule(tau={self.tau})'


class ConstantFieldSchedule(FieldSchedule):
    def __init__(self, h_field: float):
        self.h_field = h_field

    def field_at(self, t: float) -> float:
        return self.h_field

    def __repr__(self) -> str:
        return f'ConstantFieldSchedule(h_field={self.h_field})'
