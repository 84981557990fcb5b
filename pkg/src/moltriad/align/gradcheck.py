"""Central finite-difference verification of analytic gradients."""
from __future__ import annotations

from typing import Callable

import torch

from .errors import NonFiniteGradient
from .model import AlignmentModel


def grad_check(
    model: AlignmentModel,
    loss_fn: Callable[[], torch.Tensor],
    h: float = 1e-5,
) -> float:
    """Max relative error between analytic and central-FD gradients.

    Every element of every parameter that received an analytic gradient is
    perturbed by +/- h.  The model must be in double precision; callers keep
    dimensions tiny so the sweep stays fast.
    """
    model.zero_grad(set_to_none=True)
    loss = loss_fn()
    loss.backward()
    worst = 0.0
    for param in model.parameters():
        if param.grad is None:
            continue
        if not torch.isfinite(param.grad).all():
            raise NonFiniteGradient("analytic gradient is not finite")
        grad = param.grad.detach().clone()
        flat = param.data.view(-1)
        flat_grad = grad.view(-1)
        for i in range(flat.numel()):
            original = flat[i].item()
            flat[i] = original + h
            with torch.no_grad():
                hi = loss_fn().item()
            flat[i] = original - h
            with torch.no_grad():
                lo = loss_fn().item()
            flat[i] = original
            numeric = (hi - lo) / (2 * h)
            analytic = flat_grad[i].item()
            scale = max(abs(analytic), abs(numeric), 1e-6)
            worst = max(worst, abs(analytic - numeric) / scale)
    return worst
