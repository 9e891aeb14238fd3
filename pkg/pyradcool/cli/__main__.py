""" Runs the command line with python -m pyradcool.cli """

from .main import run

run()
