from propcat.cli.main import run

run()
