"""
Module: oracle.py

This module defines the route computing offline reference values for a request set.
"""

from fastapi import APIRouter

from dronesched.models.common import ErrorMessage
from dronesched.models.inputs import OracleInput
from dronesched.models.intervals import Instance
from dronesched.models.reports import OracleSummary
from dronesched.services.normalize import validate_instance
from dronesched.services.oracle import summarize

router = APIRouter()


@router.post("", responses={422: {"model": ErrorMessage}}, response_model=OracleSummary)
def oracle(body: OracleInput) -> OracleSummary:
    """
    Clique number and lower bound; with `exact`, the optimum for instances within the exhaustive limit.
    """
    validated = validate_instance(Instance(intervals=body.intervals, budget=body.budget))
    return summarize(validated.intervals, validated.budget, exact=body.exact)
