"""
Diagnostics models.
"""

from pydantic import BaseModel, Field


class TimeSeriesRecord(BaseModel):
    """One sampled row of a run's diagnostics.

    Attributes:
        t: Sample time
        energy: ||u||^2
        enstrophy: ||grad u||^2, equal to ||curl u||^2 for solenoidal u
        alpha_energy: ||u||^2 + alpha^2 ||grad u||^2
        q: alpha ||grad u||
        dt: Step size that produced this sample (0 for the initial sample)
    """

    t: float = Field(ge=0.0, description="Sample time")
    energy: float = Field(ge=0.0, description="Squared L2 norm of velocity")
    enstrophy: float = Field(ge=0.0, description="Squared L2 norm of vorticity")
    alpha_energy: float = Field(ge=0.0, description="Conserved alpha-energy")
    q: float = Field(ge=0.0, description="Criterion integrand alpha*||grad u||")
    dt: float = Field(ge=0.0, description="Step size used to reach t")


SERIES_COLUMNS = ("t", "energy", "enstrophy", "alpha_energy", "q", "dt")
