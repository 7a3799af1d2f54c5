"""
Module: health.py

This module provides a simple health check endpoint for the web server.
"""

from fastapi import APIRouter

from dronesched.models.enums import Strategy

router = APIRouter()


@router.get("/health")
def health():
    """Health check, with the packing strategies this build serves"""
    return {"status": "OK", "strategies": [str(strategy) for strategy in Strategy]}
