"""
UlrichForge - Verification Router
Samples a presentation matrix and certifies the cokernel.
"""
from fastapi import APIRouter

from schemas.requests import VerifyRequest
from services import commands
from utils.canonical import to_plain

router = APIRouter(prefix="/api", tags=["Verification"])


@router.post("/verify")
def verify(data: VerifyRequest):
    """Runs in the threadpool; larger ranks take seconds."""
    out = commands.verify(data.e, data.b, data.k, data.r, seed=data.seed, field=data.field,
                          trials=data.trials, with_ext=data.with_ext, with_scroll=data.scroll)
    return to_plain(out)
