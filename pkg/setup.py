from setuptools import setup, find_packages
from os.path import join, dirname
import dyer

setup(
    name='dyerwords',
    version=dyer.__version__,
    packages=find_packages(exclude=['tests']),
    long_description=open(join(dirname(__file__), 'README.md')).read(),
    entry_points={
        'console_scripts': ['dyerwords = dyer.main:main']
    },
    test_suite="tests",
    install_requires=[
        'numpy>=1.21',
        'networkx>=2.6',
    ],
    description="The program solves the word problem in Dyer groups and quasi-Dyer groups: normal forms, lengths, "
                "supports, parabolic subgroups, reflection cocycles and confluence of rewriting systems."
)
