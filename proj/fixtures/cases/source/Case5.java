// Case5: m1 -> {a1}, m2 -> {a2}, m3 -> {a3}
public class Case5 {
    private int a1;
    private int a2;
    private int a3;

    public void m1() { a1 = 1; }

    public void m2() { a2 = 2; }

    public void m3() { a3 = 3; }
}
