// Case3: m1 -> {a1, a2}, m2 -> {a1, a2}, m3 -> {a3}
public class Case3 {
    private String a1;
    private String a2;
    private String a3;

    public String m1() {
        return a1 + a2;
    }

    public boolean m2() {
        return a1.equals(a2);
    }

    public void m3() {
        a3 = "";
    }
}
